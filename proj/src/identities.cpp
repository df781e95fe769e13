#include "jbt/identities.hpp"

#include "jbt/errors.hpp"

namespace jbt {
inline namespace operators {

std::vector<IdentityId> identity_catalogue() {
    return {IdentityId::JP33, IdentityId::JP34, IdentityId::JP35, IdentityId::JP36,
            IdentityId::JPA1, IdentityId::JPA2, IdentityId::JPS,
            IdentityId::SelfQuasiInverse};
}

std::string identity_name(IdentityId id) {
    switch (id) {
    case IdentityId::JP33: return "JP33";
    case IdentityId::JP34: return "JP34";
    case IdentityId::JP35: return "JP35";
    case IdentityId::JP36: return "JP36";
    case IdentityId::JPA1: return "JPA1";
    case IdentityId::JPA2: return "JPA2";
    case IdentityId::JPS: return "JPS";
    case IdentityId::SelfQuasiInverse: return "self-quasi-inverse";
    }
    return "?";
}

int identity_arity(IdentityId id) {
    switch (id) {
    case IdentityId::JP35: return 2;
    case IdentityId::JP36: return 4;
    case IdentityId::SelfQuasiInverse: return 1;
    default: return 3;
    }
}

namespace {

IdentityCheck from_maps(std::string name, const LinearMap& lhs, const LinearMap& rhs) {
    IdentityCheck out;
    out.name = std::move(name);
    out.residual = (lhs.matrix() - rhs.matrix()).norm();
    out.scale = 1.0 + std::max(lhs.frobenius_norm(), rhs.frobenius_norm());
    return out;
}

IdentityCheck from_elements(std::string name, const Element& lhs, const Element& rhs) {
    IdentityCheck out;
    out.name = std::move(name);
    out.residual = (lhs - rhs).coord_norm();
    out.scale = 1.0 + std::max(lhs.coord_norm(), rhs.coord_norm());
    return out;
}

Element qi(const Element& x, const Element& y) { return quasi_inverse(x, y).value; }

IdentityCheck evaluate(IdentityId id, const std::vector<Element>& in) {
    switch (id) {
    case IdentityId::JP33: {
        const Element &x = in[0], &y = in[1], &z = in[2];
        return from_maps("JP33", bergmann(x, y + z),
                         bergmann(x, y).compose(bergmann(qi(x, y), z)));
    }
    case IdentityId::JP34: {
        const Element &x = in[0], &y = in[1], &z = in[2];
        return from_maps("JP34", bergmann(y + z, x),
                         bergmann(z, qi(x, y)).compose(bergmann(y, x)));
    }
    case IdentityId::JP35: {
        const Element &x = in[0], &y = in[1];
        return from_maps("JP35", bergmann(x, y).inverse(), bergmann(qi(x, y), -y));
    }
    case IdentityId::JP36: {
        // The right-hand conjugation is by B(u,v): the second-slot operator
        // B(v,u) satisfies B(v,u)* = B(u,v) in the canonical pairing, which
        // is what survives once the conjugate-linear slot is unwound.
        const Element &u = in[0], &v = in[1], &x = in[2], &y = in[3];
        const LinearMap buv = bergmann(u, v);
        return from_maps(
            "JP36", bergmann(buv.apply(x), bergmann(v, u).inverse().apply(y)),
            buv.compose(bergmann(x, y)).compose(buv.inverse()));
    }
    case IdentityId::JPA1: {
        const Element &x = in[0], &y = in[1], &z = in[2];
        return from_elements("JPA1", qi(x, y + z), qi(qi(x, y), z));
    }
    case IdentityId::JPA2: {
        const Element &x = in[0], &y = in[1], &z = in[2];
        const Element rhs =
            qi(x, y) + bergmann(x, y).inverse().apply(qi(z, qi(y, x)));
        return from_elements("JPA2", qi(x + z, y), rhs);
    }
    case IdentityId::JPS: {
        const Element &x = in[0], &y = in[1], &z = in[2];
        const LinearMap bxy = bergmann(x, y);
        const Element lhs = qi(bxy.apply(z), y);
        const Element rhs = bxy.apply(qi(z, bergmann(y, x).apply(y)));
        return from_elements("JPS", lhs, rhs);
    }
    case IdentityId::SelfQuasiInverse: {
        const Element& a = in[0];
        const BergmannSqrt root = bergmann_sqrt(a);
        return from_elements("self-quasi-inverse", qi(a, a),
                             root.inverse_map.apply(a));
    }
    }
    throw DomainError("verify_identity: unknown identity");
}

} // namespace

IdentityCheck verify_identity(IdentityId id, const std::vector<Element>& inputs) {
    if (static_cast<int>(inputs.size()) != identity_arity(id))
        throw DomainError("verify_identity: " + identity_name(id) + " takes " +
                          std::to_string(identity_arity(id)) + " inputs, got " +
                          std::to_string(inputs.size()));
    for (std::size_t i = 1; i < inputs.size(); ++i)
        require_same_factor(inputs[0], inputs[i], "verify_identity");
    try {
        return evaluate(id, inputs);
    } catch (const NotQuasiInvertibleError& e) {
        IdentityCheck out;
        out.name = identity_name(id);
        out.skipped = true;
        out.skip_reason = e.what();
        return out;
    } catch (const NumericalError& e) {
        IdentityCheck out;
        out.name = identity_name(id);
        out.skipped = true;
        out.skip_reason = e.what();
        return out;
    }
}

IdentityCheck verify_jordan_identity(const Element& a, const Element& b,
                                     const Element& x, const Element& y,
                                     const Element& z) {
    const Element lhs = triple_product(a, b, triple_product(x, y, z));
    const Element rhs = triple_product(triple_product(a, b, x), y, z) -
                        triple_product(x, triple_product(b, a, y), z) +
                        triple_product(x, y, triple_product(a, b, z));
    IdentityCheck out;
    out.name = "jordan-identity";
    out.residual = (lhs - rhs).coord_norm();
    out.scale = 1.0 + ball_norm(a) * ball_norm(b) * ball_norm(x) * ball_norm(y) *
                          ball_norm(z);
    return out;
}

} // namespace operators
} // namespace jbt
