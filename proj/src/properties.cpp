#include "loops/properties.hpp"

#include <vector>

namespace loops {

namespace {

void set_witness(std::string* witness, std::string text) {
    if (witness) *witness = std::move(text);
}

std::vector<int> inverses_or_throw(const LoopTable& q) {
    std::vector<int> inv(static_cast<std::size_t>(q.order()) + 1);
    for (int x = 1; x <= q.order(); ++x) inv[static_cast<std::size_t>(x)] = q.inverse(x);
    return inv;
}

bool check_flexible(const LoopTable& q, std::string* w) {
    for (int x = 1; x <= q.order(); ++x)
        for (int y = 1; y <= q.order(); ++y)
            if (q.mul(x, q.mul(y, x)) != q.mul(q.mul(x, y), x)) {
                set_witness(w, "x=" + std::to_string(x) + " y=" + std::to_string(y));
                return false;
            }
    return true;
}

bool check_lip(const LoopTable& q, std::string* w) {
    auto inv = inverses_or_throw(q);
    for (int x = 1; x <= q.order(); ++x)
        for (int y = 1; y <= q.order(); ++y)
            if (q.mul(inv[static_cast<std::size_t>(x)], q.mul(x, y)) != y) {
                set_witness(w, "x=" + std::to_string(x) + " y=" + std::to_string(y));
                return false;
            }
    return true;
}

bool check_rip(const LoopTable& q, std::string* w) {
    auto inv = inverses_or_throw(q);
    for (int x = 1; x <= q.order(); ++x)
        for (int y = 1; y <= q.order(); ++y)
            if (q.mul(q.mul(x, y), inv[static_cast<std::size_t>(y)]) != x) {
                set_witness(w, "x=" + std::to_string(x) + " y=" + std::to_string(y));
                return false;
            }
    return true;
}

bool check_aaip(const LoopTable& q, std::string* w) {
    auto inv = inverses_or_throw(q);
    for (int x = 1; x <= q.order(); ++x)
        for (int y = 1; y <= q.order(); ++y)
            if (inv[static_cast<std::size_t>(q.mul(x, y))] !=
                q.mul(inv[static_cast<std::size_t>(y)], inv[static_cast<std::size_t>(x)])) {
                set_witness(w, "x=" + std::to_string(x) + " y=" + std::to_string(y));
                return false;
            }
    return true;
}

bool check_aip(const LoopTable& q, std::string* w) {
    auto inv = inverses_or_throw(q);
    for (int x = 1; x <= q.order(); ++x)
        for (int y = 1; y <= q.order(); ++y)
            if (inv[static_cast<std::size_t>(q.mul(x, y))] !=
                q.mul(inv[static_cast<std::size_t>(x)], inv[static_cast<std::size_t>(y)])) {
                set_witness(w, "x=" + std::to_string(x) + " y=" + std::to_string(y));
                return false;
            }
    return true;
}

bool check_left_alternative(const LoopTable& q, std::string* w) {
    for (int x = 1; x <= q.order(); ++x)
        for (int y = 1; y <= q.order(); ++y)
            if (q.mul(x, q.mul(x, y)) != q.mul(q.mul(x, x), y)) {
                set_witness(w, "x=" + std::to_string(x) + " y=" + std::to_string(y));
                return false;
            }
    return true;
}

bool check_right_alternative(const LoopTable& q, std::string* w) {
    for (int x = 1; x <= q.order(); ++x)
        for (int y = 1; y <= q.order(); ++y)
            if (q.mul(x, q.mul(y, y)) != q.mul(q.mul(x, y), y)) {
                set_witness(w, "x=" + std::to_string(x) + " y=" + std::to_string(y));
                return false;
            }
    return true;
}

bool check_left_bol(const LoopTable& q, std::string* w) {
    for (int x = 1; x <= q.order(); ++x)
        for (int y = 1; y <= q.order(); ++y) {
            int xyx = q.mul(x, q.mul(y, x));
            for (int z = 1; z <= q.order(); ++z)
                if (q.mul(x, q.mul(y, q.mul(x, z))) != q.mul(xyx, z)) {
                    set_witness(w, "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                                       " z=" + std::to_string(z));
                    return false;
                }
        }
    return true;
}

bool check_moufang(const LoopTable& q, std::string* w) {
    for (int x = 1; x <= q.order(); ++x)
        for (int y = 1; y <= q.order(); ++y)
            for (int z = 1; z <= q.order(); ++z)
                if (q.mul(q.mul(x, y), q.mul(z, x)) != q.mul(q.mul(x, q.mul(y, z)), x)) {
                    set_witness(w, "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                                       " z=" + std::to_string(z));
                    return false;
                }
    return true;
}

bool check_commutative(const LoopTable& q, std::string* w) {
    for (int x = 1; x <= q.order(); ++x)
        for (int y = x + 1; y <= q.order(); ++y)
            if (q.mul(x, y) != q.mul(y, x)) {
                set_witness(w, "x=" + std::to_string(x) + " y=" + std::to_string(y));
                return false;
            }
    return true;
}

bool check_associative(const LoopTable& q, std::string* w) {
    for (int x = 1; x <= q.order(); ++x)
        for (int y = 1; y <= q.order(); ++y) {
            int xy = q.mul(x, y);
            for (int z = 1; z <= q.order(); ++z)
                if (q.mul(xy, z) != q.mul(x, q.mul(y, z))) {
                    set_witness(w, "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                                       " z=" + std::to_string(z));
                    return false;
                }
        }
    return true;
}

bool subloop_is_associative(const LoopTable& q, const ElementSet& s) {
    auto mem = s.members();
    for (int x : mem)
        for (int y : mem) {
            int xy = q.mul(x, y);
            for (int z : mem)
                if (q.mul(xy, z) != q.mul(x, q.mul(y, z))) return false;
        }
    return true;
}

bool check_power_associative(const LoopTable& q, std::string* w) {
    for (int x = 1; x <= q.order(); ++x) {
        ElementSet seed(q.order());
        seed.insert(x);
        if (!subloop_is_associative(q, q.subloop_generated(seed))) {
            set_witness(w, "x=" + std::to_string(x));
            return false;
        }
    }
    return true;
}

bool check_diassociative(const LoopTable& q, std::string* w) {
    for (int x = 1; x <= q.order(); ++x)
        for (int y = x; y <= q.order(); ++y) {
            ElementSet seed(q.order());
            seed.insert(x);
            seed.insert(y);
            if (!subloop_is_associative(q, q.subloop_generated(seed))) {
                set_witness(w, "x=" + std::to_string(x) + " y=" + std::to_string(y));
                return false;
            }
        }
    return true;
}

bool check_gamma(const LoopTable& q, std::string* w) {
    if (!check_commutative(q, w)) return false;
    if (!check_aip(q, w)) return false;
    auto inv = inverses_or_throw(q);
    for (int x = 1; x <= q.order(); ++x) {
        Perm lx = q.left_translation(x);
        Perm lxi = q.left_translation(inv[static_cast<std::size_t>(x)]);
        if (!(lx * lxi == lxi * lx)) {
            set_witness(w, "x=" + std::to_string(x));
            return false;
        }
    }
    for (int x = 1; x <= q.order(); ++x) {
        Perm px = p_map(q, x);
        for (int y = 1; y <= q.order(); ++y)
            if (!(px * p_map(q, y) * px == p_map(q, px(y)))) {
                set_witness(w, "x=" + std::to_string(x) + " y=" + std::to_string(y));
                return false;
            }
    }
    return true;
}

} // namespace

const std::vector<std::pair<PropertyId, std::string>>& property_names() {
    static const std::vector<std::pair<PropertyId, std::string>> names = {
        {PropertyId::flexible, "flexible"},
        {PropertyId::lip, "lip"},
        {PropertyId::rip, "rip"},
        {PropertyId::ip, "ip"},
        {PropertyId::aaip, "aaip"},
        {PropertyId::aip, "aip"},
        {PropertyId::left_alternative, "left_alternative"},
        {PropertyId::right_alternative, "right_alternative"},
        {PropertyId::left_bol, "left_bol"},
        {PropertyId::moufang, "moufang"},
        {PropertyId::left_bruck, "left_bruck"},
        {PropertyId::gamma, "gamma"},
        {PropertyId::diassociative, "diassociative"},
        {PropertyId::power_associative, "power_associative"},
        {PropertyId::commutative, "commutative"},
        {PropertyId::associative, "associative"},
    };
    return names;
}

std::optional<PropertyId> property_from_name(const std::string& name) {
    for (const auto& [id, n] : property_names())
        if (n == name) return id;
    return std::nullopt;
}

bool has_property(const LoopTable& q, PropertyId p, std::string* witness) {
    switch (p) {
    case PropertyId::flexible: return check_flexible(q, witness);
    case PropertyId::lip: return check_lip(q, witness);
    case PropertyId::rip: return check_rip(q, witness);
    case PropertyId::ip: return check_lip(q, witness) && check_rip(q, witness);
    case PropertyId::aaip: return check_aaip(q, witness);
    case PropertyId::aip: return check_aip(q, witness);
    case PropertyId::left_alternative: return check_left_alternative(q, witness);
    case PropertyId::right_alternative: return check_right_alternative(q, witness);
    case PropertyId::left_bol: return check_left_bol(q, witness);
    case PropertyId::moufang: return check_moufang(q, witness);
    case PropertyId::left_bruck:
        return check_left_bol(q, witness) && check_aip(q, witness);
    case PropertyId::gamma: return check_gamma(q, witness);
    case PropertyId::diassociative: return check_diassociative(q, witness);
    case PropertyId::power_associative: return check_power_associative(q, witness);
    case PropertyId::commutative: return check_commutative(q, witness);
    case PropertyId::associative: return check_associative(q, witness);
    }
    throw validation_error("unknown property");
}

Perm p_map(const LoopTable& q, int x) {
    int xi = q.inverse(x);
    std::vector<int> img(static_cast<std::size_t>(q.order()));
    // P_x(y) = R_x(L_{x^-1}^{-1}(y)) = (x^-1 \ y) x
    for (int y = 1; y <= q.order(); ++y)
        img[static_cast<std::size_t>(y) - 1] = q.mul(q.ldiv(xi, y), x);
    return Perm::from_images(std::move(img));
}

} // namespace loops
