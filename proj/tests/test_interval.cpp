#include <doctest.h>

#include "parabolica/ieval.hpp"
#include "parabolica/interval.hpp"
#include "test_util.hpp"

using namespace parabolica;
using namespace parabolica::testutil;

namespace {

bool encloses(const Interval& v, const Rat& exact) {
    return Rat(rat_from_double(v.lo)) <= exact && exact <= Rat(rat_from_double(v.hi));
}

}  // namespace

TEST_CASE("rational to interval conversion is outward and tight") {
    CHECK(rat_to_interval(Rat(1, 2)).lo == 0.5);
    CHECK(rat_to_interval(Rat(1, 2)).hi == 0.5);
    Interval third = rat_to_interval(Rat(1, 3));
    CHECK(third.lo < third.hi);
    CHECK(encloses(third, Rat(1, 3)));
    Interval neg = rat_to_interval(Rat(-1, 3));
    CHECK(encloses(neg, Rat(-1, 3)));
    CHECK(neg.hi - neg.lo <= 1e-16);
}

TEST_CASE("interval arithmetic encloses exact rational arithmetic") {
    std::mt19937 rng(7001);
    for (int k = 0; k < 2000; ++k) {
        Rat a = random_rational(rng, 50, 9), b = random_rational(rng, 50, 9);
        Interval ia = rat_to_interval(a), ib = rat_to_interval(b);
        CHECK(encloses(iadd(ia, ib), a + b));
        CHECK(encloses(isub(ia, ib), a - b));
        CHECK(encloses(imul(ia, ib), a * b));
        if (b != 0 && !rat_to_interval(b).contains_zero()) CHECK(encloses(idiv(ia, ib), a / b));
    }
}

TEST_CASE("even powers of straddling intervals stay non-negative") {
    Interval v{-2.0, 3.0};
    Interval p = ipow(v, 4);
    CHECK(p.lo == 0.0);
    CHECK(p.hi >= 81.0);
    CHECK(ipow(v, 3).lo <= -8.0);
    CHECK(ipow(v, 3).hi >= 27.0);
}

TEST_CASE("exact point evaluation stays a point") {
    SparsePoly f = poly_monomial(Rat(1), 2, 2);
    f.add_term({3, 2}, Rat(1));
    f.add_term({2, 3}, Rat(1));
    f.add_term({2, 4}, Rat(1));
    BoxQ unit{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
    Interval v = eval_interval(f, unit);
    CHECK(v.lo == 4.0);
    CHECK(v.hi == 4.0);
}

TEST_CASE("eval_interval encloses eval on random point-in-box samples") {
    std::mt19937 rng(7002);
    for (int k = 0; k < 1000; ++k) {
        SparsePoly f = random_poly(rng, 6, 8);
        Rat qx = random_rational(rng, 8, 5), qy = random_rational(rng, 8, 5);
        Rat wx = rat_abs(random_rational(rng, 3, 4)), wy = rat_abs(random_rational(rng, 3, 4));
        BoxQ box{{qx - wx, qx + wx}, {qy - wy, qy + wy}};
        Rat exact = eval(f, {qx, qy});
        CHECK(encloses(eval_interval(f, box), exact));
    }
}

TEST_CASE("interval box predicates") {
    CHECK(isubset_strict({0.1, 0.2}, {0.0, 1.0}));
    CHECK_FALSE(isubset_strict({0.0, 0.2}, {0.0, 1.0}));
    CHECK(idisjoint({0.0, 1.0}, {1.5, 2.0}));
    CHECK_FALSE(idisjoint({0.0, 1.0}, {1.0, 2.0}));
    RatInterval v{Rat(-3), Rat(5)};
    RatInterval w = rat_interval_scale(v, Rat(-1, 2));
    CHECK(w.lo == Rat(-5, 2));
    CHECK(w.hi == Rat(3, 2));
}
