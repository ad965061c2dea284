#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "klsf/bitset.hpp"
#include "klsf/group.hpp"

namespace klsf {

/// A set of elements of one group, stored as a bitset over element indices.
class Subset {
public:
    explicit Subset(GroupSpec group) : group_(std::move(group)), bits_(group_.size()) {}
    Subset(GroupSpec group, Bitset bits);

    static Subset from_indices(const GroupSpec& group, std::span<const std::size_t> indices);
    static Subset from_indices(const GroupSpec& group, std::initializer_list<std::size_t> indices) {
        return from_indices(group, std::span<const std::size_t>(indices.begin(), indices.size()));
    }
    static Subset from_elements(const GroupSpec& group, std::span<const Element> elements);
    static Subset full(const GroupSpec& group);

    const GroupSpec& group() const noexcept { return group_; }
    const Bitset& bits() const noexcept { return bits_; }

    bool contains(std::size_t x) const { return bits_.test(x); }
    void insert(std::size_t x);
    void erase(std::size_t x);
    std::size_t size() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }

    /// Member indices in ascending order.
    std::vector<std::size_t> members() const;

    /// x + S.
    Subset translate(std::size_t x) const { return Subset(group_, group_.translate(bits_, x)); }
    /// -S.
    Subset negate() const;

    Subset& operator|=(const Subset& other);
    Subset& operator&=(const Subset& other);
    friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
    friend Subset operator&(Subset a, const Subset& b) { return a &= b; }

    bool operator==(const Subset& other) const { return group_ == other.group_ && bits_ == other.bits_; }

    std::string to_string() const;

private:
    void require_same_group(const Subset& other) const;

    GroupSpec group_;
    Bitset bits_;
};

}  // namespace klsf
