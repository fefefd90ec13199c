#include "gcoh/presentation.hpp"

#include "gcoh/error.hpp"
#include "gcoh/smith.hpp"

namespace gcoh {

Coeff Coeff::parse(std::string_view text) {
    if (text == "Z") return Z();
    if (text == "Q") return Q();
    if (text == "QmodZ" || text == "Q/Z") return QmodZ();
    constexpr std::string_view prefix = "Zmod:";
    if (text.substr(0, prefix.size()) == prefix) {
        Rational n;
        try {
            n = parse_rational(text.substr(prefix.size()));
        } catch (const std::exception&) {
            throw InputError("bad coefficient modulus in '" + std::string(text) + "'");
        }
        if (!is_integral(n) || n < 2) throw InputError("coefficient modulus must be an integer >= 2");
        return Zmod(as_integer(n));
    }
    throw InputError("unknown coefficient domain '" + std::string(text) + "' (expected Z, Q, QmodZ or Zmod:n)");
}

std::string Coeff::name() const {
    switch (kind) {
        case Kind::Z: return "Z";
        case Kind::Q: return "Q";
        case Kind::QmodZ: return "QmodZ";
        case Kind::Zmod: return "Zmod:" + modulus.str();
    }
    return "?";
}

Integer AbelianGroupPresentation::torsion_order() const {
    Integer order = 1;
    for (const auto& d : torsion) order *= d;
    return order;
}

std::string AbelianGroupPresentation::to_string(const std::string& free_symbol) const {
    if (is_trivial()) return "0";
    std::string out;
    if (rank > 0) out = rank == 1 ? free_symbol : free_symbol + "^" + std::to_string(rank);
    for (const auto& d : torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + d.str();
    }
    return out;
}

AbelianGroupPresentation canonical_presentation(const std::vector<Integer>& cyclic_orders) {
    AbelianGroupPresentation out;
    std::vector<Integer> finite;
    for (const auto& a : cyclic_orders) {
        if (a == 0)
            ++out.rank;
        else if (abs(a) > 1)
            finite.push_back(abs(a));
    }
    if (finite.empty()) return out;
    int k = static_cast<int>(finite.size());
    IntegerMatrix diag(k, k);
    for (int i = 0; i < k; ++i) diag(i, i) = finite[i];
    for (const auto& s : snf(diag).invariants())
        if (s > 1) out.torsion.push_back(s);
    return out;
}

}  // namespace gcoh
