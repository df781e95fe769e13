#pragma once

#include <string>
#include <vector>

#include "jbt/bergmann.hpp"

namespace jbt {
inline namespace operators {

// Catalogue of quasi-inverse / Bergmann-operator identities.  The labels are
// the conventional Jordan-pair equation numbers plus the self-quasi-inverse
// relation a^a = B(a,a)^{-1/2} a.
enum class IdentityId : int {
    JP33, // B(x,y+z) = B(x,y) B(x^y,z)
    JP34, // B(y+z,x) = B(z,x^y) B(y,x)
    JP35, // B(x,y)^{-1} = B(x^y,-y)
    JP36, // B(B(u,v)x, B(v,u)^{-1}y) = B(u,v) B(x,y) B(u,v)^{-1}
    JPA1, // x^{y+z} = (x^y)^z
    JPA2, // (x+z)^y = x^y + B(x,y)^{-1} z^{(y^x)}
    JPS,  // (B(x,y)z)^y = B(x,y) z^{B(y,x)y}
    SelfQuasiInverse,
};

struct IdentityCheck {
    std::string name;
    double residual = 0.0; // Frobenius / coordinate norm of LHS - RHS
    double scale = 1.0;    // 1 + max(||LHS||, ||RHS||), for relative thresholds
    bool skipped = false;
    std::string skip_reason;
};

std::vector<IdentityId> identity_catalogue();
std::string identity_name(IdentityId id);
int identity_arity(IdentityId id);

// Evaluates both sides of the identity on the given inputs and reports the
// residual.  A quasi-inverse that fails to exist marks the check skipped
// instead of throwing.
IdentityCheck verify_identity(IdentityId id, const std::vector<Element>& inputs);

// Residual of {a,b,{x,y,z}} - {{a,b,x},y,z} + {x,{b,a,y},z} - {x,y,{a,b,z}}
// with scale 1 + ||a|| ||b|| ||x|| ||y|| ||z||.
IdentityCheck verify_jordan_identity(const Element& a, const Element& b,
                                     const Element& x, const Element& y,
                                     const Element& z);

} // namespace operators
} // namespace jbt
