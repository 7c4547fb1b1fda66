#include "moyal/algebra.hpp"

#include "moyal/blocks.hpp"

namespace moyal {

std::vector<RelationCheck> heisenberg_suite(const HSSpace& space, const RepOperators& rep, double tolerance) {
    const BasisBlock safe = BasisBlock::safe(space.levels());
    const double theta = space.theta();
    const Operator one = Operator::identity(space.dim());
    std::vector<RelationCheck> out;
    auto check = [&](std::string name, const Operator& lhs, const Operator& rhs) {
        const double r = safe.restrict(Matrix(lhs.matrix() - rhs.matrix())).cwiseAbs().maxCoeff();
        out.push_back({std::move(name), r, tolerance});
    };
    auto comm = [](const Operator& a, const Operator& b) { return commutator(a, b); };
    const Operator zero = Operator::zero(space.dim());

    check("[X1,X2]=i*theta", comm(rep.X1, rep.X2), (kI * theta) * one);
    check("[X1,P1]=i", comm(rep.X1, rep.P1), kI * one);
    check("[X2,P2]=i", comm(rep.X2, rep.P2), kI * one);
    check("[X1,P2]=0", comm(rep.X1, rep.P2), zero);
    check("[X2,P1]=0", comm(rep.X2, rep.P1), zero);
    check("[P1,P2]=0", comm(rep.P1, rep.P2), zero);
    check("[X1R,X2R]=-i*theta", comm(rep.X1R, rep.X2R), (-kI * theta) * one);
    check("[X1L,X1R]=0", comm(rep.X1, rep.X1R), zero);
    check("[X1L,X2R]=0", comm(rep.X1, rep.X2R), zero);
    check("[X2L,X1R]=0", comm(rep.X2, rep.X1R), zero);
    check("[X2L,X2R]=0", comm(rep.X2, rep.X2R), zero);
    check("[B_L,B_Ldag]=1", comm(rep.B_L, rep.B_Ldag), one);
    check("[B_R,B_Rdag]=-1", comm(rep.B_R, rep.B_Rdag), -one);
    check("[B_L,B_R]=0", comm(rep.B_L, rep.B_R), zero);
    check("[B_L,B_Rdag]=0", comm(rep.B_L, rep.B_Rdag), zero);
    check("[X1c,X2c]=0", comm(rep.X1c, rep.X2c), zero);
    check("X1c=(X1L+X1R)/2", rep.X1c, 0.5 * (rep.X1 + rep.X1R));
    check("X2c=(X2L+X2R)/2", rep.X2c, 0.5 * (rep.X2 + rep.X2R));
    return out;
}

std::vector<RelationCheck> heisenberg_suite(const HSSpace& space, double tolerance) {
    return heisenberg_suite(space, build_rep(space), tolerance);
}

}  // namespace moyal
