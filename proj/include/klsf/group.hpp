#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "klsf/bitset.hpp"
#include "klsf/numtheory.hpp"

namespace klsf {

/// External view of a group element: one residue per invariant factor.
struct Element {
    std::vector<Int> coords;

    bool operator==(const Element&) const = default;
};

enum class Canonicalize { no, yes };

/**
 * A finite abelian group Z_{d1} x ... x Z_{dm} in invariant-factor form
 * (d1 | d2 | ... | dm, every di >= 2, order > 1).
 *
 * Elements are addressed internally by a mixed-radix index in [0, n): the
 * last coordinate varies fastest, so index order is lexicographic order on
 * coordinates and the cyclic case reduces to the residue itself.
 */
class GroupSpec {
public:
    /// Throws std::invalid_argument for an empty list, a broken divisibility
    /// chain (unless `canon` is yes) or a trivial group.
    static GroupSpec make(std::vector<Int> factors, Canonicalize canon = Canonicalize::no);
    static GroupSpec cyclic(Int n) { return make({n}); }

    std::span<const Int> factors() const noexcept { return factors_; }
    std::size_t rank() const noexcept { return factors_.size(); }
    Int order() const noexcept { return n_; }
    Int exponent() const noexcept { return v_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(n_); }
    bool is_cyclic() const noexcept { return factors_.size() == 1; }

    std::size_t index_of(const Element& x) const;
    Element element_at(std::size_t index) const;
    Int coord(std::size_t index, std::size_t axis) const {
        return static_cast<Int>(index / strides_[axis]) % factors_[axis];
    }

    std::size_t add(std::size_t x, std::size_t y) const;
    std::size_t neg(std::size_t x) const;
    std::size_t scale(Int h, std::size_t x) const;
    /// Order of the element at `x`.
    Int element_order(std::size_t x) const;

    /// x + S for a bitset S over this group's indices.
    Bitset translate(const Bitset& set, std::size_t x) const;

    /// "10" or "2x4x8".
    std::string to_string() const;
    /// Element as "7" (cyclic) or "(1,3)".
    std::string format_element(std::size_t index) const;

    bool operator==(const GroupSpec& other) const { return factors_ == other.factors_; }

private:
    std::vector<Int> factors_;
    std::vector<std::size_t> strides_;
    Int n_ = 0;
    Int v_ = 0;
};

GroupSpec make_group(std::vector<Int> factors, Canonicalize canon = Canonicalize::no);

Element add(const GroupSpec& g, const Element& x, const Element& y);
Element scale(const GroupSpec& g, Int h, const Element& x);
Element neg(const GroupSpec& g, const Element& x);

/// Invariant factors of Z_{f1} x ... x Z_{fr} for an arbitrary factor list (1s ignored).
std::vector<Int> invariant_factors(std::span<const Int> factors);

}  // namespace klsf
