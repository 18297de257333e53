#include <doctest.h>

#include "diastasis/flag.hpp"

using namespace dia;

TEST_CASE("diagram parsing and chart sizes") {
    PaintedDiagram su3 = parse_diagram("SU3", {1, 2});
    CHECK(su3.rank() == 2);
    CHECK(su3.matrix_dim() == 3);
    CHECK(parse_diagram("Sp3", {2}).matrix_dim() == 6);
    CHECK(parse_diagram("SO7", {2}).matrix_dim() == 7);
    CHECK(parse_diagram("SO8", {2}).matrix_dim() == 8);
    CHECK_THROWS_AS(parse_diagram("SU3", {}), parse_error);
    CHECK_THROWS_AS(parse_diagram("SU3", {5}), parse_error);
    CHECK_THROWS_AS(parse_diagram("G2", {1}), parse_error);

    CHECK(build_flag(parse_diagram("SU3", {1, 2})).coords.size() == 3);
    CHECK(build_flag(parse_diagram("Sp3", {2})).coords.size() == 7);
}

TEST_CASE("Z placement for SU groups") {
    // SU(2), one node: Z = z E_21
    FlagContext su2 = build_flag(parse_diagram("SU2", {1}));
    REQUIRE(su2.coords.size() == 1);
    CHECK(su2.Z[1][0] == Poly::var_z(1, 0));
    CHECK(su2.nilpotency == 2);

    // SU(3) full flag: z1 at (2,1), z2 at (3,1), z3 at (3,2)
    FlagContext su3 = build_flag(parse_diagram("SU3", {1, 2}));
    CHECK(su3.Z[1][0] == Poly::var_z(3, 0));
    CHECK(su3.Z[2][0] == Poly::var_z(3, 1));
    CHECK(su3.Z[2][1] == Poly::var_z(3, 2));
    CHECK(su3.nilpotency == 3);
}

TEST_CASE("nilpotency") {
    CHECK(build_flag(parse_diagram("Sp3", {2})).nilpotency == 3);
    CHECK(build_flag(parse_diagram("SO7", {2})).nilpotency == 3);
    CHECK(build_flag(parse_diagram("SO8", {2})).nilpotency == 3);
    CHECK(build_flag(parse_diagram("SU4", {2})).nilpotency == 2);  // Grassmannian
}

TEST_CASE("exp and gram matrix") {
    FlagContext su3 = build_flag(parse_diagram("SU3", {1, 2}));
    // exp(Z) = I + Z + Z^2/2 for nilpotency 3
    SymbolicMatrix e = exp_nilpotent(su3.Z);
    SymbolicMatrix z2 = su3.Z;
    {
        // Z^2 by hand
        unsigned dim = 3, m = 3;
        SymbolicMatrix r(dim, std::vector<Poly>(dim, Poly(m)));
        for (unsigned i = 0; i < dim; ++i)
            for (unsigned k = 0; k < dim; ++k)
                for (unsigned j = 0; j < dim; ++j) r[i][j] += su3.Z[i][k] * su3.Z[k][j];
        z2 = r;
    }
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) {
            Poly expect = z2[i][j].scaled(GRat(Rat(1, 2))) + su3.Z[i][j];
            if (i == j) expect += Poly::constant(3, GRat(1));
            CHECK(e[i][j] == expect);
        }

    SymbolicMatrix a = gram_matrix(su3);
    // hermitian with A(0) = I
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) {
            CHECK(a[i][j] == a[j][i].conj());
            CHECK(a[i][j].constant_term() == (i == j ? GRat(1) : GRat(0)));
        }
}

TEST_CASE("SU(3) admissible minors match the displayed polynomials") {
    FlagContext su3 = build_flag(parse_diagram("SU3", {1, 2}));
    SymbolicMatrix a = gram_matrix(su3);
    auto z = [&](unsigned k) { return Poly::var_z(3, k - 1); };
    auto zb = [&](unsigned k) { return Poly::var_zbar(3, k - 1); };
    Poly one = Poly::constant(3, GRat(1));
    Poly quarter = (z(1) * zb(1) * z(3) * zb(3)).scaled(GRat(Rat(1, 4)));
    Poly cross = (z(2) * zb(1) * zb(3)).scaled(GRat(Rat(1, 2)));
    Poly cross_c = (zb(2) * z(1) * z(3)).scaled(GRat(Rat(1, 2)));

    CHECK(admissible_minor(a, 1) == one + z(1) * zb(1) + z(2) * zb(2) + quarter + cross + cross_c);
    CHECK(admissible_minor(a, 2) == one + z(2) * zb(2) + z(3) * zb(3) + quarter - cross - cross_c);

    // SU(2), r=1: 1 + |z|^2
    FlagContext su2 = build_flag(parse_diagram("SU2", {1}));
    SymbolicMatrix a2 = gram_matrix(su2);
    CHECK(admissible_minor(a2, 1) ==
          Poly::constant(1, GRat(1)) + Poly::var_z(1, 0) * Poly::var_zbar(1, 0));

    // Delta_r(0) = 1 and no purely holomorphic monomials
    for (unsigned r = 1; r <= 2; ++r) {
        Poly d = admissible_minor(a, r);
        CHECK(d.constant_term() == GRat(1));
        for (const auto& [e, v] : d.terms()) {
            auto [dz, dzb] = Poly::bidegree(e, 3);
            CHECK((dz == 0) == (dzb == 0));
        }
    }
}

TEST_CASE("forbidden_23_scan") {
    for (const char* grp : {"Sp3", "SO7", "SO8"}) {
        FlagContext ctx = build_flag(parse_diagram(grp, {2}));
        Scan23Report rep = forbidden_23_scan(ctx, 2);
        CHECK(rep.squared_rows_vanish);
        CHECK(rep.degree23_part_matches_patterns);
        CHECK_FALSE(rep.monomials.empty());
        for (const auto& m : rep.monomials) {
            CHECK((m.pattern == 1 || m.pattern == -1));
            auto [i, j, al, be, ga] = m.indices;
            CHECK(i <= 2);
            CHECK(j <= 2);
            CHECK(al > 2);
        }
    }
    // SU(3) Delta_1 carries (1,2) forbidden monomials but nothing of type (2,3)
    FlagContext su3 = build_flag(parse_diagram("SU3", {1, 2}));
    Scan23Report rep1 = forbidden_23_scan(su3, 1);
    CHECK(rep1.monomials.empty());
}

TEST_CASE("no_cancellation_check") {
    for (const char* grp : {"Sp3", "SO7", "SO8"}) {
        FlagContext ctx = build_flag(parse_diagram(grp, {2}));
        NoCancellation nc = no_cancellation_check(ctx, 2);
        CHECK(nc.prefactor == Rat(1, 2));
        CHECK(nc.match);
        CHECK_FALSE(nc.delta_coefficient.is_zero());
    }
    FlagContext su3 = build_flag(parse_diagram("SU3", {1, 2}));
    CHECK_THROWS_AS(no_cancellation_check(su3, 2), std::invalid_argument);
}

TEST_CASE("flag_dual_verdict") {
    // SU(3) full flag: no dual; the witness has kind (1,2) or (2,1)
    FlagVerdict v = flag_dual_verdict(parse_diagram("SU3", {1, 2}), {Rat(1), Rat(1)}, 6);
    CHECK_FALSE(v.has_dual_up_to_order);
    REQUIRE(v.witness);
    unsigned ki = v.witness->kind_i(), kj = v.witness->kind_j();
    CHECK(ki + kj == 3);

    // SU(2) one black node (CP^1): dual exists up to order
    FlagVerdict cp1 = flag_dual_verdict(parse_diagram("SU2", {1}), {Rat(1)}, 8);
    CHECK(cp1.has_dual_up_to_order);

    // Sp(3), r=2: no dual, witness of kind (2,3) or (3,2)
    FlagVerdict sp = flag_dual_verdict(parse_diagram("Sp3", {2}), {Rat(1)}, 6);
    CHECK_FALSE(sp.has_dual_up_to_order);

    // Hermitian symmetric case: Grassmannian SU(4), one black node
    FlagVerdict gr = flag_dual_verdict(parse_diagram("SU4", {2}), {Rat(1)}, 6);
    CHECK(gr.has_dual_up_to_order);

    CHECK_THROWS_AS(flag_dual_verdict(parse_diagram("SU3", {1, 2}), {Rat(1)}, 6),
                    std::invalid_argument);
    CHECK_THROWS_AS(flag_dual_verdict(parse_diagram("SU2", {1}), {Rat(-1)}, 6),
                    std::invalid_argument);
}

TEST_CASE("bochner case table") {
    CHECK(bochner_case_table().size() == 3);
    CHECK(bochner_case(parse_diagram("Sp3", {2}), {Rat(5)}) == 1);
    CHECK(bochner_case(parse_diagram("SU3", {1, 2}), {Rat(2), Rat(2)}) == 2);
    CHECK_FALSE(bochner_case(parse_diagram("SU3", {1, 2}), {Rat(1), Rat(2)}).has_value());
    CHECK(bochner_case(parse_diagram("SO8", {1, 4}), {Rat(2), Rat(1)}) == 3);
    CHECK_FALSE(bochner_case(parse_diagram("SO8", {1, 4}), {Rat(1), Rat(1)}).has_value());
}
