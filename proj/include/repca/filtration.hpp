#ifndef REPCA_FILTRATION_HPP
#define REPCA_FILTRATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "repca/matrix.hpp"

namespace repca {

// Finite-dimensional unital algebra given by structure constants:
// e_i e_j = sum_k mul[i][j][k] e_k. Associativity and the two-sided unit law
// are verified at construction.
class FinDimAlgebra {
public:
    FinDimAlgebra(std::vector<std::string> basis, Vec unit,
                  std::vector<std::vector<Vec>> mul);

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::string>& basis_names() const { return basis_; }
    const Vec& unit() const { return unit_; }
    const std::vector<std::vector<Vec>>& mul_table() const { return mul_; }

    Vec multiply(const Vec& a, const Vec& b) const;
    Vec bracket(const Vec& a, const Vec& b) const;
    Vec basis_vector(int i) const;

private:
    std::vector<std::string> basis_;
    Vec unit_;
    std::vector<std::vector<Vec>> mul_;
};

// Basis of the span of left-nested brackets [r_1,[r_2,...,[r_{m-1},r_m]...]
// over basis elements; m = 1 is the whole algebra.
std::vector<Vec> lie_layer(const FinDimAlgebra& a, int m);

// F^0 = R and F^{-d} = sum over compositions d = i_1 + ... + i_m of the
// ideal products (R L_{i_1} R) ... (R L_{i_m} R), where L_i is the Lie layer
// with i bracket instances. dims lists dim F^0, dim F^{-1}, ... until the
// chain stabilizes (a repeated value, or zero, ends the list).
struct FiltrationProfile {
    std::vector<int> dims;
    std::vector<RowSpace> subspaces; // one per listed dim, F^0 first

    bool reaches_zero() const { return !dims.empty() && dims.back() == 0; }
    // smallest d with F^{-d-1} = 0, or nullopt when the chain stabilizes
    // at a nonzero ideal
    std::optional<int> nil_level() const;
};

FiltrationProfile commutator_filtration(const FinDimAlgebra& a);

// True iff F^{-d-1} = 0.
bool nil_d_test(const FinDimAlgebra& a, int d);

struct Abelianization {
    FinDimAlgebra algebra;
    bool unit_collapsed = false; // the commutator ideal contained 1
};

// Quotient by the two-sided ideal generated by all brackets. Basis names of
// surviving coordinates are kept.
Abelianization abelianization(const FinDimAlgebra& a);

} // namespace repca

#endif
