#pragma once

#include "pptor/group.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pptor {

/// A group written as a sum of cyclic summands, e.g. "(Z/4)^3 + Z/2 + Z^2".
/// Elements and subgroups are read and printed in the coordinates of the
/// summands as written; `presentation` converts to invariant-factor form.
struct ParsedGroup {
    std::vector<Int> moduli;  // one per summand, 0 for Z
    PresentedGroup presentation;

    const FgGroup& group() const { return presentation.group; }
};

/// Grammar: sum := power ('+' power)*, power := atom ('^' INT)?,
/// atom := 'Z' ('/' INT)? | '0' | '(' sum ')'. ParseError on bad input.
ParsedGroup parse_group(std::string_view text);

/// "(1,0,2)" with one entry per summand. MembershipError on a length mismatch.
Element parse_element(std::string_view text, const ParsedGroup& g);

/// "<(1,1),(0,2)>", "<>" or "0".
Subgroup parse_subgroup(std::string_view text, const ParsedGroup& g);

/// Summand coordinates, reduced into [0, m) for finite summands.
std::string format_element(const Element& a, const ParsedGroup& g);
std::string format_subgroup(const Subgroup& h, const ParsedGroup& g);
/// An element of the n-th power of g, as a tuple of elements.
std::string format_tuple(const Element& a, const ParsedGroup& g, std::size_t n);

}  // namespace pptor
