#pragma once

// Transvection representation on H1 of a bounded genus-g surface.
// Basis a1,b1,...,ag,bg,d1..d_{n-1}; a right twist acts by x -> x + <x,c> c with <x,y> = x^T J y.

#include <string>

#include "dtwist/atlas.hpp"
#include "dtwist/integer.hpp"
#include "dtwist/word.hpp"

namespace dt {

IMatrix intersection_form(const SurfaceModel &m);

template <class Scalar>
Scalar pairing(const Vector<Scalar> &x, const Vector<Scalar> &y, const Matrix<Scalar> &J) {
    return (x.transpose() * J * y)(0, 0);
}

// I + sign * c (J c)^T
template <class Scalar>
Matrix<Scalar> transvection(const Vector<Scalar> &c, const Matrix<Scalar> &J, int sign) {
    Matrix<Scalar> T = Matrix<Scalar>::Identity(c.size(), c.size());
    T += Scalar(sign) * c * (J * c).transpose();
    return T;
}

// M <- M * transvection(c, J, sign), in O(r^2)
template <class Scalar>
void right_multiply_transvection(Matrix<Scalar> &M, const Vector<Scalar> &c, const Matrix<Scalar> &J, int sign) {
    Vector<Scalar> Mc = M * c;
    Vector<Scalar> Jc = J * c;
    M += Scalar(sign) * Mc * Jc.transpose();
}

template <class Scalar>
bool preserves_form(const Matrix<Scalar> &M, const Matrix<Scalar> &J) {
    return M.transpose() * J * M == J;
}

IMatrix transvection(const Atlas &atlas, const std::string &model, const std::string &curve, int sign);

// Class carried by a letter; a defined letter w a w^-1 carries M_w [a].
IVector letter_class(const Letter &l, const Atlas &atlas, const std::string &model, const DefinitionSet &defs);

// Rightmost letter acts first: image(l1 ... lk) = T_l1 ... T_lk.
IMatrix evaluate_word(const Word &w, const Atlas &atlas, const std::string &model, const DefinitionSet &defs);
IMatrix evaluate_word(const Word &w, const Atlas &atlas, const std::string &model);

bool check_relation_homology(const NamedRelation &rel, const Atlas &atlas);

// Image on the closed surface after gluing disks: the symplectic 2g x 2g block.
IMatrix cap_boundaries(const Word &w, const Atlas &atlas, const std::string &model, const DefinitionSet &defs);
IMatrix cap_boundaries(const Word &w, const Atlas &atlas, const std::string &model);
IMatrix cap(const IMatrix &M, const SurfaceModel &m);

bool is_identity(const IMatrix &M);
std::string format_matrix(const IMatrix &M);

} // namespace dt
