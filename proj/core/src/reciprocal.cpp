#include "mdet/reciprocal.hpp"

#include "mdet/errors.hpp"

namespace mdet {

SparsePoly circuit_polynomial(const Circuit& c, unsigned nvars) {
    SparsePoly p(nvars);
    auto elems = subset_to_list(c.support);
    for (int i : elems) {
        Exponent e(nvars, 0);
        for (int j : elems)
            if (j != i) e[j] = 1;
        p.add_term(e, c.dependency[i]);
    }
    return p;
}

std::vector<SparsePoly> reciprocal_ideal_generators(const Matroid& m) {
    std::vector<SparsePoly> gens;
    const unsigned nvars = static_cast<unsigned>(m.n_elements());
    for (const Circuit& c : m.circuits()) gens.push_back(circuit_polynomial(c, nvars));
    return gens;
}

std::vector<Rat> reciprocal_point(const QMat& a, const std::vector<Rat>& t) {
    std::vector<Rat> ell = mat_vec(a.transpose(), t);
    for (std::size_t j = 0; j < ell.size(); ++j) {
        if (ell[j] == 0)
            throw OnArrangement("l_" + std::to_string(j) + "(t) = 0");
        ell[j] = Rat(1) / ell[j];
    }
    return ell;
}

}  // namespace mdet
