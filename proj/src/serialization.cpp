#include "jbt/serialization.hpp"

#include "jbt/errors.hpp"

namespace jbt {
inline namespace cli {

Json factor_to_json(const Factor& f) {
    switch (f.kind()) {
    case FactorKind::Matrix:
        return Json{{"kind", "matrix"}, {"rows", f.rows()}, {"cols", f.cols()}};
    case FactorKind::Commutative:
        return Json{{"kind", "commutative"}, {"dim", f.dim()}};
    case FactorKind::DirectSum: {
        Json parts = Json::array();
        for (const Factor& p : f.parts()) parts.push_back(factor_to_json(p));
        return Json{{"kind", "direct-sum"}, {"parts", std::move(parts)}};
    }
    }
    throw DomainError("factor_to_json: unknown factor kind");
}

Factor factor_from_json(const Json& j) {
    if (j.is_string()) return Factor::parse(j.get<std::string>());
    if (!j.is_object() || !j.contains("kind"))
        throw DomainError("factor_from_json: expected a string or a tagged object");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "matrix")
        return Factor::matrix(j.at("rows").get<int>(), j.at("cols").get<int>());
    if (kind == "commutative") return Factor::commutative(j.at("dim").get<int>());
    if (kind == "direct-sum") {
        std::vector<Factor> parts;
        for (const Json& p : j.at("parts")) parts.push_back(factor_from_json(p));
        return Factor::direct_sum(parts);
    }
    throw DomainError("factor_from_json: unknown kind '" + kind + "'");
}

namespace {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw DomainError("complex_from_json: expected [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

} // namespace

Json element_to_json(const Element& x) {
    Json coords = Json::array();
    for (int i = 0; i < x.dim(); ++i) coords.push_back(complex_to_json(x.coords()(i)));
    return Json{{"factor", factor_to_json(x.factor())}, {"coords", std::move(coords)}};
}

Element element_from_json(const Json& j) {
    const Factor f = factor_from_json(j.at("factor"));
    const Json& coords = j.at("coords");
    if (!coords.is_array() || static_cast<int>(coords.size()) != f.dim())
        throw DomainError("element_from_json: coords length mismatch");
    Eigen::VectorXcd v(f.dim());
    for (int i = 0; i < f.dim(); ++i) v(i) = complex_from_json(coords[i]);
    return Element(f, std::move(v));
}

Json linear_map_to_json(const LinearMap& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.matrix().rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.matrix().cols(); ++k)
            row.push_back(complex_to_json(m.matrix()(i, k)));
        rows.push_back(std::move(row));
    }
    return Json{{"factor", factor_to_json(m.factor())}, {"matrix", std::move(rows)}};
}

LinearMap linear_map_from_json(const Json& j) {
    const Factor f = factor_from_json(j.at("factor"));
    const Json& rows = j.at("matrix");
    if (!rows.is_array() || static_cast<int>(rows.size()) != f.dim())
        throw DomainError("linear_map_from_json: matrix row count mismatch");
    Eigen::MatrixXcd m(f.dim(), f.dim());
    for (int i = 0; i < f.dim(); ++i) {
        const Json& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != f.dim())
            throw DomainError("linear_map_from_json: matrix column count mismatch");
        for (int k = 0; k < f.dim(); ++k) m(i, k) = complex_from_json(row[k]);
    }
    return LinearMap(f, std::move(m));
}

Json spectral_to_json(const SpectralData& s) {
    Json frame = Json::array();
    for (const Element& e : s.frame) frame.push_back(element_to_json(e));
    return Json{{"lambdas", s.lambdas}, {"frame", std::move(frame)}};
}

Json automorphism_to_json(const BallAutomorphism& g) {
    return Json{{"isometry", linear_map_to_json(g.isometry())},
                {"base", element_to_json(g.base())}};
}

BallAutomorphism automorphism_from_json(const Json& j) {
    return BallAutomorphism(linear_map_from_json(j.at("isometry")),
                            element_from_json(j.at("base")));
}

} // namespace cli
} // namespace jbt
