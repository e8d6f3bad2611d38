// Copyright 2026 The qaclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QACLAB_POLY_FAMILY_H
#define QACLAB_POLY_FAMILY_H

#include <optional>
#include <string>
#include <vector>

#include "qaclab/poly/multilinear_poly.h"

namespace qaclab {

/// Split lengths of the four variable blocks. A block of length zero is absent.
/// Indices split as s = s1 s2 with s1 the leading k1 bits.
struct BlockSpec {
    int k1 = 1, k2 = 0;
    int l1 = 0, l2 = 0;
    int m1 = 1, m2 = 0;
    int n1 = 0, n2 = 0;

    int k() const {
        return k1 + k2;
    }
    int l() const {
        return l1 + l2;
    }
    int m() const {
        return m1 + m2;
    }
    int n() const {
        return n1 + n2;
    }
    bool has_y() const {
        return l() > 0;
    }
    bool has_w() const {
        return n() > 0;
    }
    /// Number of variables of the polynomial: 2^k + 2^l + 2^m + 2^n over present blocks.
    int total_vars() const;

    /// Throws ShapeError unless k1, m1 >= 1, l1 >= 1 when Y is present, n1 >= 1
    /// when W is present, Y only together with W, and every length is in [0, 12].
    void validate() const;
};

enum class FamilyShape {
    AllContactTwoZeros,
    AllContactOneZero,
    AllContact,
    MostGeneralTwoZeros,
    MostGeneralOneZero,
    MostGeneral,
};

const char *shape_name(FamilyShape shape);
/// Shape determined by which blocks are present and whether any k2/l2/m2/n2 is nonzero.
FamilyShape shape_of(const BlockSpec &spec);

/// Builds T1*T2 - alpha * sum over s1 = t1 = u1 = v1 = 1...1 of c_{s,t} d_{u,v} x_s y_t z_u w_v
/// with T1 = sum c_{s,t} x_s y_t and T2 = sum d_{u,v} z_u w_v. Absent blocks drop out
/// of the products and sums.
///
/// c is indexed by s * 2^l + t and d by u * 2^n + v. Throws ShapeError on bad block lengths
/// or a coefficient vector of the wrong length, PreconditionError on alpha == 0.
MultilinearPoly build_family_P(const BlockSpec &spec, const std::vector<Scalar> &c, const std::vector<Scalar> &d,
                               const Scalar &alpha);

/// Which existential coefficient hypotheses hold. Hypotheses about an absent block
/// hold vacuously.
struct HypothesisReport {
    /// Some c_{1 s2, 1 t2} != 0.
    bool x_ones = false;
    /// Some c_{s,t} != 0 with s1 != 1.
    bool x_non_ones = false;
    /// Some c_{s,t} != 0 with t1 != 1.
    bool y_non_ones = false;
    /// Some d_{1 u2, 1 v2} != 0.
    bool z_ones = false;
    /// Some d_{u,v} != 0 with u1 != 1.
    bool z_non_ones = false;
    /// Some d_{u,v} != 0 with v1 != 1.
    bool w_non_ones = false;

    bool all() const {
        return x_ones && x_non_ones && y_non_ones && z_ones && z_non_ones && w_non_ones;
    }
    /// Names of the failing hypotheses.
    std::vector<std::string> failed() const;
};

HypothesisReport check_family_hypotheses(const BlockSpec &spec, const std::vector<Scalar> &c,
                                         const std::vector<Scalar> &d);

/// The explicit zero assignment for the two-block shape with k2 = m2 = 0:
/// x_{s0} = A, x_1 = 1, z_{u0} = B, z_1 = 1 and all other variables 0, where s0, u0
/// are the first non-ones indices with nonzero coefficient and
/// B = alpha c_1 d_1 / (d_{u0} (c_1 + c_{s0} A)) - d_1 / d_{u0}.
struct TwoZerosWitness {
    int A = 0;
    Scalar B;
    Assignment assignment;
};

/// Returns the assignment for the given A, or nullopt when c_1 + c_{s0} A == 0.
/// Throws ShapeError unless the shape is AllContactTwoZeros and PreconditionError
/// when the hypotheses fail.
std::optional<TwoZerosWitness> two_zeros_assignment(const BlockSpec &spec, const std::vector<Scalar> &c,
                                                    const std::vector<Scalar> &d, const Scalar &alpha, int A);

/// Tries A = 0, 1, 2, 3, 4 in order and returns the first assignment that is
/// justifying for P with P(a) = 0.
std::optional<TwoZerosWitness> two_zeros_witness(const BlockSpec &spec, const std::vector<Scalar> &c,
                                                 const std::vector<Scalar> &d, const Scalar &alpha,
                                                 const Tolerance &tol = {});

}  // namespace qaclab

#endif
