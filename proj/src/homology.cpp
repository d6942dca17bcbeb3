#include "dtwist/homology.hpp"

#include <sstream>

#include "dtwist/error.hpp"

namespace dt {

IMatrix intersection_form(const SurfaceModel &m) {
    IMatrix J = IMatrix::Zero(m.rank(), m.rank());
    for (int i = 0; i < m.genus; ++i) {
        J(2 * i, 2 * i + 1) = 1;
        J(2 * i + 1, 2 * i) = -1;
    }
    return J;
}

IMatrix transvection(const Atlas &atlas, const std::string &model, const std::string &curve, int sign) {
    const auto &m = atlas.model(model);
    return transvection<Int>(atlas.curve(model, curve).homology, intersection_form(m), sign);
}

namespace {

void multiply_letters(IMatrix &M, const Word &w, const Atlas &atlas, const std::string &model,
                      const DefinitionSet &defs, const IMatrix &J) {
    Word flat = expand_definitions(w, defs, atlas.curve_predicate(model));
    for (const auto &l : flat) {
        const auto &c = atlas.curve(model, l.sym);
        right_multiply_transvection<Int>(M, c.homology, J, l.sign);
    }
}

const DefinitionSet &merged(const Atlas &atlas, const std::string &model, const DefinitionSet &defs,
                            DefinitionSet &scratch) {
    const auto &base = atlas.defs(model);
    if (base.empty()) return defs;
    if (defs.empty()) return base;
    scratch = base;
    for (const auto &[k, v] : defs) scratch.insert_or_assign(k, v);
    return scratch;
}

} // namespace

IVector letter_class(const Letter &l, const Atlas &atlas, const std::string &model, const DefinitionSet &defs) {
    DefinitionSet scratch;
    const auto &all = merged(atlas, model, defs, scratch);
    auto it = all.find(l.sym);
    if (it == all.end()) return atlas.curve(model, l.sym).homology;
    IMatrix Mw = evaluate_word(it->second.conjugator, atlas, model, all);
    return Mw * letter_class(it->second.core, atlas, model, all);
}

IMatrix evaluate_word(const Word &w, const Atlas &atlas, const std::string &model, const DefinitionSet &defs) {
    const auto &m = atlas.model(model);
    IMatrix J = intersection_form(m);
    IMatrix M = IMatrix::Identity(m.rank(), m.rank());
    DefinitionSet scratch;
    multiply_letters(M, w, atlas, model, merged(atlas, model, defs, scratch), J);
    if (!preserves_form<Int>(M, J)) fail(ErrorKind::Overflow, "evaluation left the symplectic group");
    return M;
}

IMatrix evaluate_word(const Word &w, const Atlas &atlas, const std::string &model) {
    return evaluate_word(w, atlas, model, DefinitionSet{});
}

bool check_relation_homology(const NamedRelation &rel, const Atlas &atlas) {
    return evaluate_word(rel.lhs, atlas, rel.model) == evaluate_word(rel.rhs, atlas, rel.model);
}

IMatrix cap(const IMatrix &M, const SurfaceModel &m) {
    int k = 2 * m.genus;
    return M.topLeftCorner(k, k);
}

IMatrix cap_boundaries(const Word &w, const Atlas &atlas, const std::string &model, const DefinitionSet &defs) {
    return cap(evaluate_word(w, atlas, model, defs), atlas.model(model));
}

IMatrix cap_boundaries(const Word &w, const Atlas &atlas, const std::string &model) {
    return cap_boundaries(w, atlas, model, DefinitionSet{});
}

bool is_identity(const IMatrix &M) { return M == IMatrix::Identity(M.rows(), M.cols()); }

std::string format_matrix(const IMatrix &M) {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            if (j) os << ' ';
            os << M(i, j);
        }
        os << '\n';
    }
    return os.str();
}

} // namespace dt
