#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jbt/errors.hpp"
#include "jbt/moebius.hpp"

using namespace jbt;

namespace {

const std::vector<Factor>& test_factors() {
    static const std::vector<Factor> fs = {
        Factor::matrix(2, 2),   Factor::matrix(2, 3),
        Factor::matrix(3, 3),   Factor::commutative(2),
        Factor::commutative(4),
        Factor::parse("matrix:2x2+commutative:1")};
    return fs;
}

Element make(const Factor& f, std::initializer_list<Complex> vals) {
    Eigen::VectorXcd v(f.dim());
    int i = 0;
    for (const Complex& c : vals) v(i++) = c;
    REQUIRE(i == f.dim());
    return Element(f, std::move(v));
}

} // namespace

TEST_CASE("scalar transvection is the disc moebius map") {
    const Factor f = Factor::commutative(1);
    // (x + a) / (1 + conj(a) x) at a = x = 0.5
    CHECK(transvection_apply(make(f, {0.5}), make(f, {0.5})).coords()(0).real() ==
          doctest::Approx(0.8).epsilon(1e-15));
    Rng rng(3);
    for (int k = 0; k < 25; ++k) {
        const Complex a = 0.9 * rng.unit_disc();
        const Complex x = 0.9 * rng.unit_disc();
        const Complex expect = (x + a) / (1.0 + std::conj(a) * x);
        const Element got = transvection_apply(make(f, {a}), make(f, {x}));
        CHECK(std::abs(got.coords()(0) - expect) <= 1e-14);
    }
}

TEST_CASE("two-dimensional worked example is exact") {
    const Factor f = Factor::commutative(2);
    const Element a = make(f, {0.5, 0.5});
    const Element x = make(f, {1.0, 0.0});

    const Element gx = transvection_apply(a, x);
    CHECK(gx.coords()(0) == Complex(1.0, 0.0));
    CHECK(gx.coords()(1) == Complex(0.5, 0.0));

    // componentwise cube of the image
    const Eigen::VectorXcd cubed = gx.coords().array().cube().matrix();
    CHECK(cubed(0) == Complex(1.0, 0.0));
    CHECK(cubed(1) == Complex(0.125, 0.0));

    // odd polynomial residual sup_i |z_i^3 - z_i| picks up the second slot
    const double residual = (cubed - gx.coords()).cwiseAbs().maxCoeff();
    CHECK(residual == 0.375);
}

TEST_CASE("transvections fix the origin correctly and invert") {
    for (const Factor& f : test_factors()) {
        Rng rng(5);
        for (int k = 0; k < 10; ++k) {
            const Element a = random_element(f, rng, 0.8);
            CHECK((transvection_apply(a, Element::zero(f)) - a).coord_norm() <=
                  1e-14);
            const Element x = random_element(f, rng, 0.95);
            const Element y = transvection_apply(a, x);
            CHECK(ball_norm(y) < 1.0);
            CHECK((transvection_apply(-a, y) - x).coord_norm() <= 1e-11);
        }
    }
}

TEST_CASE("transvection domain guard") {
    const Factor f = Factor::commutative(1);
    // pole of the scalar map: a x = -1
    CHECK_THROWS_AS(transvection_apply(make(f, {1.0}), make(f, {-1.0})), Error);
    // norm bound ||a|| ||x|| >= 1 rejected up front
    CHECK_THROWS_AS(transvection_apply(make(f, {0.8}), make(f, {1.3})),
                    DomainError);
    // but boundary x with ||a|| < 1 is fine and stays on the boundary
    const Element img = transvection_apply(make(f, {0.5}), make(f, {-1.0}));
    CHECK(std::abs(img.coords()(0) - Complex(-1.0, 0.0)) <= 1e-15);
}

TEST_CASE("linear isometries preserve norm and triple product") {
    for (const Factor& f : test_factors()) {
        Rng rng(6);
        for (int k = 0; k < 8; ++k) {
            const LinearMap t = random_isometry(f, rng);
            const Element x = random_element(f, rng, 1.2);
            const Element y = random_element(f, rng, 1.2);
            const Element z = random_element(f, rng, 1.2);
            CHECK(ball_norm(t.apply(x)) ==
                  doctest::Approx(ball_norm(x)).epsilon(1e-12));
            const Element lhs = t.apply(triple_product(x, y, z));
            const Element rhs = triple_product(t.apply(x), t.apply(y), t.apply(z));
            CHECK((lhs - rhs).coord_norm() <= 1e-12 * (1.0 + rhs.coord_norm()));
        }
    }
}

TEST_CASE("isometries intertwine transvections") {
    // T g_a = g_{Ta} T
    for (const Factor& f : test_factors()) {
        Rng rng(7);
        for (int k = 0; k < 8; ++k) {
            const LinearMap t = random_isometry(f, rng);
            const Element a = random_element(f, rng, 0.7);
            const Element x = random_element(f, rng, 0.9);
            const Element lhs = t.apply(transvection_apply(a, x));
            const Element rhs = transvection_apply(t.apply(a), t.apply(x));
            CHECK((lhs - rhs).coord_norm() <= 1e-12);
        }
    }
}

TEST_CASE("haar unitaries are unitary") {
    Rng rng(8);
    for (int n : {1, 2, 3, 5}) {
        const Eigen::MatrixXcd u = haar_unitary(n, rng);
        CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).norm() <=
              1e-13);
    }
}

TEST_CASE("composition cocycle is an isometry and closes the group law") {
    for (const Factor& f : test_factors()) {
        Rng rng(9);
        for (int k = 0; k < 8; ++k) {
            const Element a = random_element(f, rng, 0.6);
            const Element b = random_element(f, rng, 0.6);
            const LinearMap kab = k_isometry(a, b);

            const Element x = random_element(f, rng, 0.9);
            CHECK(ball_norm(kab.apply(x)) ==
                  doctest::Approx(ball_norm(x)).epsilon(1e-11));

            // g_a(g_b(x)) = g_{g_a(b)}(k(a,b) x)
            const Element lhs = transvection_apply(a, transvection_apply(b, x));
            const Element c = transvection_apply(a, b);
            const Element rhs = transvection_apply(c, kab.apply(x));
            CHECK((lhs - rhs).coord_norm() <= 1e-10);
        }
    }
}

TEST_CASE("swap law relates the two one-parameter orbits") {
    // g_a(b) = k(b,a)^{-1} g_b(a)
    for (const Factor& f : test_factors()) {
        Rng rng(10);
        for (int k = 0; k < 8; ++k) {
            const Element a = random_element(f, rng, 0.6);
            const Element b = random_element(f, rng, 0.6);
            const Element lhs = transvection_apply(a, b);
            const Element rhs =
                k_isometry(b, a).inverse().apply(transvection_apply(b, a));
            CHECK((lhs - rhs).coord_norm() <= 1e-10);
        }
    }
}

TEST_CASE("derivative matches central finite differences") {
    for (const Factor& f : {Factor::matrix(2, 2), Factor::commutative(3)}) {
        Rng rng(11);
        for (int k = 0; k < 5; ++k) {
            const Element a = random_element(f, rng, 0.6);
            const Element x0 = random_element(f, rng, 0.6);
            const LinearMap d = transvection_derivative(a, x0);
            const double h = 1e-6;
            // real and imaginary directions along each coordinate axis
            for (int j = 0; j < f.dim(); ++j) {
                const Element ej = Element::basis(f, j);
                for (const Complex dir : {Complex(1, 0), Complex(0, 1)}) {
                    const Element step = ej * (dir * h);
                    const Element fd =
                        (transvection_apply(a, x0 + step) -
                         transvection_apply(a, x0 - step)) *
                        Complex(1.0 / (2.0 * h), 0.0);
                    const Element an = d.apply(ej * dir);
                    CHECK((fd - an).coord_norm() <=
                          1e-6 * (1.0 + an.coord_norm()));
                }
            }
        }
    }
}

TEST_CASE("derivative at the origin is the square root factor") {
    const Factor f = Factor::matrix(2, 2);
    Rng rng(12);
    const Element a = random_element(f, rng, 0.7);
    const LinearMap d0 = transvection_derivative(a, Element::zero(f));
    CHECK((d0.matrix() - bergmann_sqrt(a).map.matrix()).norm() <= 1e-12);
}

TEST_CASE("ball automorphisms compose and invert in canonical form") {
    for (const Factor& f : test_factors()) {
        Rng rng(13);
        for (int k = 0; k < 6; ++k) {
            const BallAutomorphism g = random_automorphism(f, rng);
            const BallAutomorphism h = random_automorphism(f, rng);
            const Element x = random_element(f, rng, 0.9);

            const BallAutomorphism gh = g.compose(h);
            CHECK((gh.apply(x) - g.apply(h.apply(x))).coord_norm() <= 1e-10);

            const BallAutomorphism gi = g.inverse();
            CHECK((gi.apply(g.apply(x)) - x).coord_norm() <= 1e-10);

            // canonical data of g g^{-1} is trivial
            const BallAutomorphism id = g.compose(gi);
            CHECK(id.base().coord_norm() <= 1e-10);
            CHECK((id.isometry().matrix() -
                   Eigen::MatrixXcd::Identity(f.dim(), f.dim()))
                      .norm() <= 1e-9);
        }
    }
}

TEST_CASE("canonical form is determined by the image of the origin") {
    const Factor f = Factor::matrix(2, 2);
    Rng rng(14);
    const BallAutomorphism g = random_automorphism(f, rng);
    // g = T o g_a sends 0 to T a; the base is recoverable as T^{-1} g(0)
    const Element at_zero = g.apply(Element::zero(f));
    CHECK((g.isometry().inverse().apply(at_zero) - g.base()).coord_norm() <=
          1e-13);
}

TEST_CASE("automorphism derivative agrees with the transvection chain rule") {
    const Factor f = Factor::commutative(3);
    Rng rng(15);
    const BallAutomorphism g = random_automorphism(f, rng);
    const Element x0 = random_element(f, rng, 0.7);
    const LinearMap expect =
        g.isometry().compose(transvection_derivative(g.base(), x0));
    CHECK((g.derivative(x0).matrix() - expect.matrix()).norm() <= 1e-13);
}
