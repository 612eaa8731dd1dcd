#include "mdet/poly.hpp"

#include "mdet/errors.hpp"

#include <numeric>
#include <sstream>

namespace mdet {

namespace {
unsigned total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }
}  // namespace

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    unsigned da = total(a), db = total(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic on equal degree
}

SparsePoly SparsePoly::monomial(unsigned nvars, const Exponent& e, const Rat& c) {
    SparsePoly p(nvars);
    p.add_term(e, c);
    return p;
}

SparsePoly SparsePoly::constant(unsigned nvars, const Rat& c) {
    return monomial(nvars, Exponent(nvars, 0), c);
}

void SparsePoly::add_term(const Exponent& e, const Rat& c) {
    if (e.size() != nvars_) throw Error("exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat SparsePoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    if (nvars_ != o.nvars_) throw Error("polynomial arity mismatch");
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + o.scaled(Rat(-1)); }

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    if (nvars_ != o.nvars_) throw Error("polynomial arity mismatch");
    SparsePoly r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponent e(nvars_);
            for (unsigned v = 0; v < nvars_; ++v) e[v] = ea[v] + eb[v];
            r.add_term(e, ca * cb);
        }
    return r;
}

SparsePoly SparsePoly::scaled(const Rat& c) const {
    SparsePoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Rat SparsePoly::evaluate(const std::vector<Rat>& x) const {
    if (x.size() != nvars_) throw Error("evaluation point arity mismatch");
    Rat sum = 0;
    for (const auto& [e, c] : terms_) {
        Rat m = c;
        for (unsigned v = 0; v < nvars_; ++v)
            for (unsigned k = 0; k < e[v]; ++k) m *= x[v];
        sum += m;
    }
    return sum;
}

int SparsePoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total(terms_.begin()->first));  // leading term has max degree
}

int SparsePoly::partial_degree(unsigned v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[v]));
    return d;
}

bool SparsePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = total(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total(e) != d) return false;
    return true;
}

std::string SparsePoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = total(e) > 0;
        if (a != 1 || !has_vars) {
            os << a;
            if (has_vars) os << " ";
        }
        bool firstv = true;
        for (unsigned v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            if (!firstv) os << " ";
            firstv = false;
            os << var;
            if (nvars_ > 1) os << v;
            if (e[v] > 1) os << "^" << e[v];
        }
    }
    return os.str();
}

}  // namespace mdet
