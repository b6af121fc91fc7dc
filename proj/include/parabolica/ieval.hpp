#pragma once

#include <vector>

#include "parabolica/interval.hpp"
#include "parabolica/sparse_poly.hpp"

namespace parabolica {

// Interval-coefficient image of a SparsePoly, fixed at construction. Term
// order matches the canonical map order; evaluation uses cached power
// tables and stays an enclosure of the exact value for every point of the
// argument box.
class IPoly {
   public:
    IPoly() = default;
    explicit IPoly(const SparsePoly& p);

    bool empty() const { return terms_.empty(); }

    Interval eval(const Interval& x, const Interval& y) const;
    Interval eval_point(double x, double y) const;

   private:
    struct Term {
        int i;
        int j;
        Interval c;
    };
    std::vector<Term> terms_;
    int max_i_ = 0;
    int max_j_ = 0;
};

// Polynomial with cached partials; eval_tight intersects the plain interval
// evaluation with a mean-value form, which is what keeps the subdivision
// solver from stalling on dependency blowup near curves.
class IPolyGrad {
   public:
    IPolyGrad() = default;
    explicit IPolyGrad(const SparsePoly& p);

    const IPoly& value() const { return p_; }
    const IPoly& dx() const { return px_; }
    const IPoly& dy() const { return py_; }

    Interval eval_tight(const BoxD& b) const;

   private:
    IPoly p_, px_, py_;
};

// Enclosure of f over a rational box.
Interval eval_interval(const SparsePoly& f, const BoxQ& box);

}  // namespace parabolica
