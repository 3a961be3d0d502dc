#include "hedonic/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hedonic {

namespace {

void require_player_count(int n, int cap, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": negative player count");
    if (n > cap) {
        throw CapacityError(std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap) + " (pass a larger cap to override)");
    }
}

int parse_int(const std::string& text, size_t begin, size_t end) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + end, value);
    if (ec != std::errc() || ptr != text.data() + end) {
        throw ParseError("invalid integer '" + text.substr(begin, end - begin) + "'");
    }
    return value;
}

}  // namespace

Coalition Coalition::of(std::initializer_list<PlayerId> members) {
    std::uint32_t mask = 0;
    for (PlayerId i : members) {
        if (i < 1 || i > kPlayerCap) throw std::invalid_argument("player id out of range: " + std::to_string(i));
        mask |= 1u << (i - 1);
    }
    return Coalition(mask);
}

PlayerId Coalition::min_member() const {
    if (empty()) throw std::invalid_argument("min_member of empty coalition");
    return std::countr_zero(mask_) + 1;
}

std::vector<PlayerId> Coalition::members() const {
    std::vector<PlayerId> out;
    out.reserve(size());
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
        out.push_back(std::countr_zero(m) + 1);
    }
    return out;
}

std::string Coalition::to_text() const {
    std::string out;
    for (PlayerId i : members()) {
        if (!out.empty()) out += ',';
        out += std::to_string(i);
    }
    return out;
}

PreferenceProfile::PreferenceProfile(int n, std::vector<std::vector<int>> tiers_by_player)
    : n_(n), tiers_(std::move(tiers_by_player)) {
    require_player_count(n, kPlayerCap, "PreferenceProfile");
    if (static_cast<int>(tiers_.size()) != n) {
        throw std::invalid_argument("PreferenceProfile: expected one tier table per player");
    }
    const std::size_t table = std::size_t(1) << n;
    for (int i = 1; i <= n; ++i) {
        const auto& row = tiers_[i - 1];
        if (row.size() != table) {
            throw std::invalid_argument("PreferenceProfile: tier table for player " + std::to_string(i) +
                                        " has wrong size");
        }
        for (std::uint32_t mask = 0; mask < table; ++mask) {
            if (((mask >> (i - 1)) & 1u) && row[mask] == kUnsetTier) {
                throw std::invalid_argument("PreferenceProfile: player " + std::to_string(i) +
                                            " has no tier for coalition {" + Coalition(mask).to_text() + "}");
            }
        }
    }
}

int PreferenceProfile::tier(PlayerId i, Coalition s) const {
    if (i < 1 || i > n_) throw std::invalid_argument("tier: player " + std::to_string(i) + " out of range");
    if (!s.subset_of(Coalition::full(n_))) throw std::invalid_argument("tier: coalition not over {1..n}");
    if (!s.contains(i)) {
        throw std::invalid_argument("tier: player " + std::to_string(i) + " not a member of {" + s.to_text() + "}");
    }
    return tiers_[i - 1][s.mask()];
}

PreferenceOrder PreferenceProfile::compare(PlayerId i, Coalition s, Coalition t) const {
    const int a = tier(i, s);
    const int b = tier(i, t);
    if (a < b) return PreferenceOrder::StrictlyPrefers;
    if (a > b) return PreferenceOrder::StrictlyDispreferred;
    return PreferenceOrder::Indifferent;
}

Partition::Partition(int n, std::vector<Coalition> blocks) : n_(n), blocks_(std::move(blocks)) {
    require_player_count(n, kPlayerCap, "Partition");
    std::uint32_t seen = 0;
    for (const Coalition& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("Partition: empty block");
        if (!b.subset_of(Coalition::full(n))) throw std::invalid_argument("Partition: block outside {1..n}");
        if (b.mask() & seen) throw std::invalid_argument("Partition: overlapping blocks");
        seen |= b.mask();
    }
    if (seen != Coalition::full(n).mask()) throw std::invalid_argument("Partition: blocks do not cover {1..n}");
    std::sort(blocks_.begin(), blocks_.end(),
              [](Coalition a, Coalition b) { return a.min_member() < b.min_member(); });
    block_idx_.assign(n + 1, -1);
    for (int k = 0; k < static_cast<int>(blocks_.size()); ++k) {
        for (PlayerId i : blocks_[k].members()) block_idx_[i] = k;
    }
}

Partition Partition::singletons(int n) {
    std::vector<Coalition> blocks;
    blocks.reserve(n);
    for (PlayerId i = 1; i <= n; ++i) blocks.push_back(Coalition::single(i));
    return Partition(n, std::move(blocks));
}

Partition Partition::grand(int n) {
    if (n == 0) return Partition(0, {});
    return Partition(n, {Coalition::full(n)});
}

Partition Partition::parse(const std::string& text, int n) {
    if (text.empty()) {
        if (n == 0) return Partition(0, {});
        throw ParseError("empty partition text");
    }
    std::vector<Coalition> blocks;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t bar = text.find('|', pos);
        if (bar == std::string::npos) bar = text.size();
        std::uint32_t mask = 0;
        size_t p = pos;
        while (p < bar) {
            size_t comma = text.find(',', p);
            if (comma == std::string::npos || comma > bar) comma = bar;
            if (comma == p) throw ParseError("empty member in partition text");
            int member = parse_int(text, p, comma);
            if (member < 1 || member > n) {
                throw ParseError("player " + std::to_string(member) + " out of range in partition text");
            }
            mask |= 1u << (member - 1);
            p = comma + 1;
        }
        if (mask == 0) throw ParseError("empty block in partition text");
        blocks.push_back(Coalition(mask));
        if (bar == text.size()) break;
        pos = bar + 1;
    }
    try {
        return Partition(n, std::move(blocks));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Coalition Partition::block_of(PlayerId i) const {
    return blocks_[block_index(i)];
}

int Partition::block_index(PlayerId i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("block_index: player out of range");
    return block_idx_[i];
}

Partition Partition::moved(PlayerId i, Coalition target) const {
    Coalition source = block_of(i);
    if (!target.empty()) {
        if (target.contains(i)) throw std::invalid_argument("moved: target already contains the player");
        bool existing = false;
        for (const Coalition& b : blocks_) existing = existing || b == target;
        if (!existing) throw std::invalid_argument("moved: target {" + target.to_text() + "} is not a block");
    }
    std::vector<Coalition> blocks;
    blocks.reserve(blocks_.size() + 1);
    for (const Coalition& b : blocks_) {
        if (b == source) {
            if (b.without(i).empty()) continue;
            blocks.push_back(b.without(i));
        } else if (b == target) {
            blocks.push_back(b.with(i));
        } else {
            blocks.push_back(b);
        }
    }
    if (target.empty()) blocks.push_back(Coalition::single(i));
    return Partition(n_, std::move(blocks));
}

Partition Partition::carved(Coalition group) const {
    if (group.empty()) throw std::invalid_argument("carved: empty coalition");
    std::vector<Coalition> blocks;
    blocks.push_back(group);
    for (const Coalition& b : blocks_) {
        Coalition rest = b.minus(group);
        if (!rest.empty()) blocks.push_back(rest);
    }
    return Partition(n_, std::move(blocks));
}

std::string Partition::to_text() const {
    std::string out;
    for (const Coalition& b : blocks_) {
        if (!out.empty()) out += '|';
        out += b.to_text();
    }
    return out;
}

std::string SizeVector::to_text() const {
    std::string out = "[";
    for (size_t k = 0; k < sizes.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(sizes[k]);
    }
    return out + "]";
}

SizeVector size_vector(const Partition& p) {
    SizeVector v;
    v.sizes.reserve(p.blocks().size());
    for (const Coalition& b : p.blocks()) v.sizes.push_back(b.size());
    std::sort(v.sizes.begin(), v.sizes.end(), std::greater<int>());
    return v;
}

GdotOrder gdot_compare(const SizeVector& a, const SizeVector& b) {
    long suma = 0, sumb = 0;
    for (int s : a.sizes) suma += s;
    for (int s : b.sizes) sumb += s;
    if (suma != sumb) throw std::invalid_argument("gdot_compare: size vectors cover different player counts");
    const size_t common = std::min(a.sizes.size(), b.sizes.size());
    for (size_t k = 0; k < common; ++k) {
        if (a.sizes[k] > b.sizes[k]) return GdotOrder::Greater;
        if (a.sizes[k] < b.sizes[k]) return GdotOrder::Less;
    }
    return GdotOrder::Equal;  // equal sums make a strict prefix impossible
}

GdotOrder gdot_compare(const Partition& a, const Partition& b) {
    if (a.player_count() != b.player_count()) {
        throw std::invalid_argument("gdot_compare: partitions over different player sets");
    }
    return gdot_compare(size_vector(a), size_vector(b));
}

std::vector<Coalition> coalitions_containing(PlayerId i, int n, int cap) {
    require_player_count(n, cap, "coalitions_containing");
    if (i < 1 || i > n) throw std::invalid_argument("coalitions_containing: player out of range");
    std::vector<Coalition> out;
    out.reserve(std::size_t(1) << (n - 1));
    const std::uint32_t full = Coalition::full(n).mask();
    const std::uint32_t bit = 1u << (i - 1);
    for (std::uint32_t mask = bit; mask <= full; ++mask) {
        if (mask & bit) out.push_back(Coalition(mask));
    }
    return out;
}

PartitionEnumerator::PartitionEnumerator(int n, int cap) : n_(n) {
    require_player_count(n, cap, "PartitionEnumerator");
    labels_.assign(n, 0);
}

std::optional<Partition> PartitionEnumerator::next() {
    if (done_) return std::nullopt;

    std::vector<Coalition> blocks;
    int block_count = n_ == 0 ? 0 : 1 + *std::max_element(labels_.begin(), labels_.end());
    blocks.assign(block_count, Coalition());
    for (int pos = 0; pos < n_; ++pos) {
        blocks[labels_[pos]] = blocks[labels_[pos]].with(pos + 1);
    }
    Partition result(n_, std::move(blocks));

    // Advance the restricted growth string: rightmost position that may grow.
    done_ = true;
    for (int pos = n_ - 1; pos >= 1; --pos) {
        int prefix_max = *std::max_element(labels_.begin(), labels_.begin() + pos);
        if (labels_[pos] <= prefix_max) {
            ++labels_[pos];
            std::fill(labels_.begin() + pos + 1, labels_.end(), 0);
            done_ = false;
            break;
        }
    }
    return result;
}

std::vector<Partition> all_partitions(int n, int cap) {
    PartitionEnumerator en(n, cap);
    std::vector<Partition> out;
    while (auto p = en.next()) out.push_back(std::move(*p));
    return out;
}

PreferenceProfile profile_from_tier_lists(int n,
                                          const std::vector<std::vector<std::vector<Coalition>>>& tiers,
                                          bool tail_completion,
                                          int cap) {
    require_player_count(n, cap, "profile_from_tier_lists");
    if (static_cast<int>(tiers.size()) != n) {
        throw std::invalid_argument("profile_from_tier_lists: expected one tier listing per player");
    }
    std::vector<std::vector<int>> tables(n, std::vector<int>(std::size_t(1) << n, PreferenceProfile::kUnsetTier));
    for (PlayerId i = 1; i <= n; ++i) {
        auto& row = tables[i - 1];
        const auto& listing = tiers[i - 1];
        for (size_t t = 0; t < listing.size(); ++t) {
            if (listing[t].empty()) {
                throw std::invalid_argument("player " + std::to_string(i) + ": empty indifference class");
            }
            for (const Coalition& s : listing[t]) {
                if (!s.contains(i)) {
                    throw std::invalid_argument("player " + std::to_string(i) + ": listed coalition {" +
                                                s.to_text() + "} does not contain the player");
                }
                if (!s.subset_of(Coalition::full(n))) {
                    throw std::invalid_argument("player " + std::to_string(i) + ": coalition {" + s.to_text() +
                                                "} outside {1.." + std::to_string(n) + "}");
                }
                if (row[s.mask()] != PreferenceProfile::kUnsetTier) {
                    throw std::invalid_argument("player " + std::to_string(i) + ": coalition {" + s.to_text() +
                                                "} listed twice");
                }
                row[s.mask()] = static_cast<int>(t);
            }
        }
        const int tail_tier = static_cast<int>(listing.size());
        const std::uint32_t bit = 1u << (i - 1);
        const std::uint32_t full = Coalition::full(n).mask();
        for (std::uint32_t mask = bit; mask <= full; ++mask) {
            if (!(mask & bit) || row[mask] != PreferenceProfile::kUnsetTier) continue;
            if (!tail_completion) {
                throw std::invalid_argument("player " + std::to_string(i) + ": coalition {" +
                                            Coalition(mask).to_text() +
                                            "} has no tier and no tail completion was requested");
            }
            row[mask] = tail_tier;
        }
    }
    return PreferenceProfile(n, std::move(tables));
}

}  // namespace hedonic
