#pragma once

#include "superschur/super_operator.hpp"

namespace superschur {

/// Dimension of the space of even operators on V^{tensor d} commuting with
/// the Koszul-signed Leibniz action of every elementary matrix e_ab of
/// gl(m|n), as an exact nullspace dimension.
long long commutant_dim(SuperSpace space, int d);

/// Dimension of the span of the d! symmetry operators of V^{tensor d}.
long long symmetry_span_dim(SuperSpace space, int d);

/// True iff the ordinary trace form (x,y) -> trace(xy) is nondegenerate on
/// the image of k[S_d] in End(V^{tensor d}); a valid semisimplicity test in
/// characteristic 0 on a faithful module.
bool image_algebra_semisimple(SuperSpace space, int d);

} // namespace superschur
