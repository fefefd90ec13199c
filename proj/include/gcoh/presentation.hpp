#pragma once

#include "gcoh/numeric.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gcoh {

struct Coeff {
    enum class Kind { Z, Q, QmodZ, Zmod };
    Kind kind = Kind::Z;
    Integer modulus = 0;  // only for Zmod

    static Coeff Z() { return {Kind::Z, 0}; }
    static Coeff Q() { return {Kind::Q, 0}; }
    static Coeff QmodZ() { return {Kind::QmodZ, 0}; }
    static Coeff Zmod(const Integer& n) { return {Kind::Zmod, n}; }
    /// Accepts "Z", "Q", "QmodZ", "Zmod:n".
    static Coeff parse(std::string_view text);

    std::string name() const;
    bool operator==(const Coeff&) const = default;
};

/// rank copies of the free summand (Z, Q or Q/Z depending on the coefficients) plus cyclic torsion.
struct AbelianGroupPresentation {
    int rank = 0;
    std::vector<Integer> torsion;  // d_i >= 2, d_i | d_{i+1}

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroupPresentation&) const = default;
    /// Order of the torsion part (1 when there is none).
    Integer torsion_order() const;
    /// Renders e.g. "Z^2 + Z/2 + Z/4" or "0"; `free_symbol` names the free summand.
    std::string to_string(const std::string& free_symbol = "Z") const;
};

/// Canonical divisibility-chain form of a direct sum of cyclic groups Z/a_i (entries 0 mean Z).
AbelianGroupPresentation canonical_presentation(const std::vector<Integer>& cyclic_orders);

}  // namespace gcoh
