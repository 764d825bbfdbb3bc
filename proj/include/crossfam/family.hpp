#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "crossfam/errors.hpp"

namespace crossfam {

using Word = std::uint64_t;

inline constexpr int kMaxGround = 63;
// Operations that enumerate 2^[n] refuse larger grounds.
inline constexpr int kMaxEnumerationGround = 20;

inline constexpr Word element_bit(int x) { return Word{1} << (x - 1); }
inline constexpr Word full_word(int n) { return n == 0 ? 0 : (~Word{0} >> (64 - n)); }

/// A subset of [n] stored as its characteristic vector: bit i-1 is set iff
/// element i belongs to the set.
class SetWord {
public:
    SetWord() = default;
    SetWord(Word bits, int ground_n);

    /// Builds a set from explicit elements, each in [1, ground_n].
    static SetWord of(std::initializer_list<int> elements, int ground_n);
    static SetWord of(std::span<const int> elements, int ground_n);

    Word bits() const noexcept { return bits_; }
    int ground_n() const noexcept { return ground_n_; }

    bool contains(int x) const noexcept { return x >= 1 && x <= 64 && (bits_ & element_bit(x)); }
    bool empty() const noexcept { return bits_ == 0; }
    int size() const noexcept;
    std::vector<int> elements() const;

    bool intersects(const SetWord& other) const noexcept { return (bits_ & other.bits_) != 0; }
    bool subset_of(const SetWord& other) const noexcept { return (bits_ & ~other.bits_) == 0; }

    /// "1,3,4" or "-" for the empty set.
    std::string to_string() const;

    friend bool operator==(const SetWord& a, const SetWord& b) noexcept { return a.bits_ == b.bits_; }
    friend auto operator<=>(const SetWord& a, const SetWord& b) noexcept { return a.bits_ <=> b.bits_; }

private:
    Word bits_ = 0;
    int ground_n_ = 0;
};

/// A finite family of subsets of [n]. Members are kept deduplicated and sorted
/// by numeric value of their characteristic vector, so two families are equal
/// iff their member lists are equal.
class SetFamily {
public:
    SetFamily() = default;
    explicit SetFamily(int ground_n);
    /// Sorts and deduplicates; throws ParameterError for bits outside [n].
    SetFamily(int ground_n, std::vector<Word> members);
    SetFamily(int ground_n, std::initializer_list<std::initializer_list<int>> sets);

    int ground_n() const noexcept { return ground_n_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    const std::vector<Word>& words() const noexcept { return members_; }
    SetWord member(std::size_t i) const { return SetWord(members_.at(i), ground_n_); }
    std::vector<SetWord> members() const;

    bool contains(Word w) const noexcept;
    bool contains(const SetWord& s) const noexcept { return contains(s.bits()); }
    /// Inclusion of member sets (ground sizes are ignored).
    bool subfamily_of(const SetFamily& other) const;

    /// Same members viewed over a different ground; throws if a member does
    /// not fit.
    SetFamily with_ground(int ground_n) const;

    std::string to_string() const;

    friend bool operator==(const SetFamily& a, const SetFamily& b) noexcept {
        return a.ground_n_ == b.ground_n_ && a.members_ == b.members_;
    }

private:
    int ground_n_ = 0;
    std::vector<Word> members_;
};

/// Lexicographic order on sorted member lists; used to break ties between
/// witnesses deterministically.
bool family_less(const SetFamily& a, const SetFamily& b);

// Section-1 vocabulary.

SetFamily bounded_family(int n, int r);
SetFamily power_set(int n);
SetWord union_support(const SetFamily& f);
SetFamily star(const SetFamily& f, int x);
SetFamily complement_of_star(const SetFamily& f, int x);
std::uint64_t binomial(int n, int k);
std::uint64_t star_size_bound(int n, int r);

bool is_intersecting(const SetFamily& f);
bool are_cross_intersecting(const SetFamily& a, const SetFamily& b);
bool are_cross_intersecting_k(std::span<const SetFamily> families);

bool is_hereditary(const SetFamily& f);
SetFamily downward_closure(const SetFamily& f);
SetFamily bases(const SetFamily& f);

/// Where a verification run draws its families from: ([n] choose <= r), or an
/// explicit family that has been checked to be hereditary and compressed.
class GroundSpec {
public:
    struct Bounded {
        int n;
        int r;
    };

    static GroundSpec bounded(int n, int r);
    /// Throws PreconditionError unless f is hereditary and compressed.
    static GroundSpec hereditary(SetFamily f);

    bool is_bounded() const noexcept { return std::holds_alternative<Bounded>(variant_); }
    const Bounded& bounded_params() const { return std::get<Bounded>(variant_); }
    int ground_n() const noexcept { return family_.ground_n(); }
    /// The materialized family (bounded grounds are expanded on construction).
    const SetFamily& family() const noexcept { return family_; }

private:
    GroundSpec(std::variant<Bounded, SetFamily> v, SetFamily f)
        : variant_(std::move(v)), family_(std::move(f)) {}

    std::variant<Bounded, SetFamily> variant_;
    SetFamily family_;
};

}  // namespace crossfam
