"""Print eps(As(St_E) x sigma) against eps(sigma) eps(sigma x omega) for each quadratic E."""

import argparse

from gpperiods.asai import asai_of_component
from gpperiods.decider import EnumBounds, base_field, component_pool
from gpperiods.epsilon import epsilon_wd
from gpperiods.langlands import Kind, central_character, langlands_parameter, steinberg_twist
from gpperiods.localfield import quadratic_character, trivial_character
from gpperiods.weildeligne import wd_tensor, wd_twist


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=int, nargs="+", default=[3, 5, 7])
    args = ap.parse_args()
    for q in args.q:
        F = base_field(q)
        for kind, pres in (("unramified", "square"), ("ramified", "square"), ("ramified", "nonsquare")):
            E = F.extension(2, kind, pres)
            om = quadratic_character(E)
            as_st = asai_of_component(steinberg_twist(trivial_character(E)))
            print(f"q = {q}, {E}")
            for s in component_pool(F, EnumBounds(max_exponents=q - 1), E):
                if not central_character(s).is_trivial() or s.kind == Kind.STEINBERG:
                    continue
                rho = langlands_parameter(s)
                lhs = epsilon_wd(wd_tensor(as_st, rho))
                rhs = epsilon_wd(rho) * epsilon_wd(wd_twist(rho, om))
                print(f"  {str(s):28s} {str(lhs):>4s} {str(rhs):>4s} {'ok' if lhs == rhs else 'DIFFER'}")


if __name__ == "__main__":
    main()
