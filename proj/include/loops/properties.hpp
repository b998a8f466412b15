#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loops/loop_table.hpp"
#include "loops/perm.hpp"

namespace loops {

enum class PropertyId {
    flexible,          // x(yx) = (xy)x
    lip,               // x^-1(xy) = y
    rip,               // (xy)y^-1 = x
    ip,                // lip and rip
    aaip,              // (xy)^-1 = y^-1 x^-1
    aip,               // (xy)^-1 = x^-1 y^-1
    left_alternative,  // x(xy) = (xx)y
    right_alternative, // x(yy) = (xy)y
    left_bol,          // x(y(xz)) = (x(yx))z
    moufang,           // (xy)(zx) = (x(yz))x
    left_bruck,        // left Bol with aip
    gamma,             // commutative aip loop with commuting L_x, L_{x^-1}
                       // and P_x P_y P_x = P_{P_x(y)}
    diassociative,     // every 2-generated subloop is associative
    power_associative, // every 1-generated subloop is associative
    commutative,
    associative,
};

// All property ids in declaration order, with stable names for reports
// and CLI filters.
const std::vector<std::pair<PropertyId, std::string>>& property_names();
std::optional<PropertyId> property_from_name(const std::string& name);

// Exhaustive identity check. Properties referring to inverses throw
// no_two_sided_inverse_error when some element lacks one. When the
// property fails and witness is non-null, it receives the first failing
// assignment.
bool has_property(const LoopTable& q, PropertyId p, std::string* witness = nullptr);

// P_x = R_x L_{x^-1}^{-1}; requires a two-sided inverse of x.
// P_x(1) = x^2.
Perm p_map(const LoopTable& q, int x);

} // namespace loops
