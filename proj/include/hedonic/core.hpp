#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hedonic {

/// Players are 1-based indices into the player set {1, ..., n}.
using PlayerId = int;

/// Explicit profiles store a tier for every (player, coalition) pair; n is
/// capped where those tables stay desk-sized.
inline constexpr int kPlayerCap = 16;
/// Partition enumeration grows as the Bell numbers; B(8) = 4140.
inline constexpr int kEnumerationCap = 8;
/// Group-deviation searches test 2^n mover sets against B(n) partitions.
inline constexpr int kGroupSearchCap = 8;
/// The hierarchy validator runs every group check on every partition.
inline constexpr int kHierarchyCap = 7;
/// Preference-restriction checks scan all context pairs per player.
inline constexpr int kRestrictionCap = 12;

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A set of players encoded as a bitmask (player i <-> bit i-1).
///
/// The empty set is representable so it can stand for "move to an empty
/// coalition"; places that require non-empty coalitions (partition blocks,
/// preference queries) validate that themselves. Ordering is by mask value,
/// which doubles as the canonical enumeration order for coalitions.
class Coalition {
public:
    constexpr Coalition() = default;
    constexpr explicit Coalition(std::uint32_t mask) : mask_(mask) {}

    static Coalition of(std::initializer_list<PlayerId> members);
    static constexpr Coalition single(PlayerId i) { return Coalition(1u << (i - 1)); }
    static constexpr Coalition full(int n) { return Coalition(n == 0 ? 0u : (0xFFFFFFFFu >> (32 - n))); }

    constexpr std::uint32_t mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool contains(PlayerId i) const { return (mask_ >> (i - 1)) & 1u; }
    constexpr bool subset_of(Coalition other) const { return (mask_ & other.mask_) == mask_; }
    constexpr bool intersects(Coalition other) const { return (mask_ & other.mask_) != 0; }

    constexpr Coalition with(PlayerId i) const { return Coalition(mask_ | (1u << (i - 1))); }
    constexpr Coalition without(PlayerId i) const { return Coalition(mask_ & ~(1u << (i - 1))); }
    constexpr Coalition unite(Coalition other) const { return Coalition(mask_ | other.mask_); }
    constexpr Coalition intersect(Coalition other) const { return Coalition(mask_ & other.mask_); }
    constexpr Coalition minus(Coalition other) const { return Coalition(mask_ & ~other.mask_); }

    /// Lowest player in the set; requires non-empty.
    PlayerId min_member() const;
    std::vector<PlayerId> members() const;

    /// Comma-separated ascending member list, e.g. "1,2,3".
    std::string to_text() const;

    auto operator<=>(const Coalition&) const = default;

private:
    std::uint32_t mask_ = 0;
};

enum class PreferenceOrder { StrictlyPrefers, Indifferent, StrictlyDispreferred };

/// A weak order over coalitions for every player, stored as integer tiers
/// (lower tier = more preferred, equal tier = indifference). Completeness and
/// transitivity hold by construction. Immutable once built.
class PreferenceProfile {
public:
    static constexpr int kUnsetTier = std::numeric_limits<int>::min();

    /// tiers_by_player[i-1] must have size 2^n; every mask containing player i
    /// must carry a tier != kUnsetTier.
    PreferenceProfile(int n, std::vector<std::vector<int>> tiers_by_player);

    int player_count() const { return n_; }

    /// Tier of coalition s for player i; throws std::invalid_argument if i is
    /// not a member of s or s is not a coalition over {1..n}.
    int tier(PlayerId i, Coalition s) const;

    PreferenceOrder compare(PlayerId i, Coalition s, Coalition t) const;

private:
    int n_;
    std::vector<std::vector<int>> tiers_;
};

/// Free-function form of PreferenceProfile::compare.
inline PreferenceOrder compare(const PreferenceProfile& profile, PlayerId i, Coalition s, Coalition t) {
    return profile.compare(i, s, t);
}

/// A disjoint cover of {1..n} by non-empty coalitions, kept in canonical form:
/// blocks sorted by their minimum member. Immutable once built.
class Partition {
public:
    Partition(int n, std::vector<Coalition> blocks);

    static Partition singletons(int n);
    static Partition grand(int n);

    /// Parses the text format "1,2|3,4" (blocks in any order; canonicalized).
    static Partition parse(const std::string& text, int n);

    int player_count() const { return n_; }
    const std::vector<Coalition>& blocks() const { return blocks_; }
    Coalition block_of(PlayerId i) const;
    /// Index of i's block within the canonical block order.
    int block_index(PlayerId i) const;

    /// Partition after player i leaves its block and joins `target`, which
    /// must be the empty coalition (i becomes a singleton) or an existing
    /// block not containing i.
    Partition moved(PlayerId i, Coalition target) const;

    /// Partition where `group` forms one block and every current block keeps
    /// its members outside `group`.
    Partition carved(Coalition group) const;

    /// Canonical text: blocks separated by '|', members ascending, blocks
    /// ordered by minimum member, e.g. "1,2|3,4".
    std::string to_text() const;

    bool operator==(const Partition&) const = default;

private:
    Partition() = default;
    int n_ = 0;
    std::vector<Coalition> blocks_;
    std::vector<int> block_idx_;  // indexed by player, -1-free once validated
};

inline Coalition block_of(const Partition& p, PlayerId i) { return p.block_of(i); }

/// Coalition cardinalities of a partition in non-increasing order.
struct SizeVector {
    std::vector<int> sizes;
    bool operator==(const SizeVector&) const = default;
    std::string to_text() const;
};

SizeVector size_vector(const Partition& p);

enum class GdotOrder { Greater, Equal, Less };

/// Lexicographic comparison of non-increasing size vectors. Both vectors must
/// sum to the same player count.
GdotOrder gdot_compare(const SizeVector& a, const SizeVector& b);
GdotOrder gdot_compare(const Partition& a, const Partition& b);

/// All coalitions containing player i over {1..n}, ascending by mask value.
std::vector<Coalition> coalitions_containing(PlayerId i, int n, int cap = kPlayerCap);

/// Streams every partition of {1..n} exactly once, in lexicographic order of
/// the restricted growth strings. The count equals the Bell number B(n).
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(int n, int cap = kEnumerationCap);
    std::optional<Partition> next();

private:
    int n_;
    bool done_ = false;
    std::vector<int> labels_;
};

std::vector<Partition> all_partitions(int n, int cap = kEnumerationCap);

/// Builds an explicit profile from per-player tier listings (most preferred
/// first). With tail_completion, coalitions absent from a player's listing
/// form a single indifference class strictly below every listed one;
/// otherwise the listing must be total.
PreferenceProfile profile_from_tier_lists(int n,
                                          const std::vector<std::vector<std::vector<Coalition>>>& tiers,
                                          bool tail_completion,
                                          int cap = kPlayerCap);

}  // namespace hedonic
