#pragma once

#include <map>
#include <string>
#include <vector>

#include "qvoa/qseries.hpp"

namespace qvoa {

/* A quasiparticle monomial: for each color i = 1..N an ordered list of
 * (charge, index) pairs (n_{a,i}, m_{a,i}), a = 1..r_i. Canonical ordering
 * within a color: charges weakly decreasing, and weakly decreasing indices
 * on runs of equal charge. Charges are positive; indices are integers
 * bounded above by the admissibility conditions (for color 1 they are
 * forced negative, for later colors index 0 and above can occur once the
 * previous color carries enough charge). Energy is minus the index sum. */
struct QPMonomial {
    struct Mode {
        int charge = 0;
        long index = 0;
    };
    std::vector<std::vector<Mode>> colors;  // colors[i-1] = list for color i

    int num_colors() const { return static_cast<int>(colors.size()); }
    long energy() const;
    bool is_canonical() const;
};

/* Admissibility at level k: for every color i and slot a,
 *   (1) m_{a+1,i} <= m_{a,i} - 2 n_{a,i}            when n_{a+1,i} = n_{a,i}
 *   (2) m_{a,i} <= (1-2a) n_{a,i} + sum_b min(n_{b,i-1}, n_{a,i})
 *   (3) n_{a,i} <= k
 * The sum in (2) runs over the modes of color i-1 and is empty for i = 1.
 * Throws invalid_parameter on a non-canonical monomial. */
bool is_admissible(const QPMonomial& mono, int k);

/* A color-charge-type: per color the weakly decreasing list of charges.
 * Its census key is the ";"-joined per-color comma lists, e.g. "2,1;;1". */
using ChargeType = std::vector<std::vector<int>>;

std::string charge_type_key(const ChargeType& type);

// Minimal energy over all admissible monomials of the given type (greedy
// top assignment); equals the tadpole (x) Cartan form of the multiplicity
// vector, which is asserted where both are available.
long charge_type_min_energy(const ChargeType& type);

/* Energy-graded count of admissible monomials: coefficient of q^E is the
 * number of admissible monomials of energy E. Exhaustive and complete to
 * the order: candidate types are the lattice points of the tadpole (x)
 * Cartan form under the order, and within a type the per-slot index bounds
 * plus remaining greedy minima prune exactly. */
QSeries qp_character(int colors, int k, int order);

// Refinement by color-charge-type; the values sum to qp_character.
std::map<std::string, QSeries> charge_type_census(int colors, int k, int order);

} // namespace qvoa
