#include "cla/catalog.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cla {

namespace {

constexpr unsigned NC = 12;

Cyc rat(long num, long den = 1) { return Cyc(NC, Rational(num, den)); }

} // namespace

// ---------------------------------------------------------------------------
// q(n) family
// ---------------------------------------------------------------------------

CatalogEntry build_qn(int n) {
    if (n < 1) throw std::invalid_argument("qn requires n >= 1");
    auto ctx = std::make_shared<GradingContext>(std::vector<int>{2, 2},
                                                Bicharacter{2, {{1, 0}, {0, 1}}});
    size_t un = static_cast<size_t>(n);
    GradedSpace sp(ctx, {un, un, un, un});
    size_t total = sp.total_dim();

    struct Ent {
        int p, q, s;
    };
    // 4x4 block sign patterns; index = degree code in lex order 00,01,10,11.
    const std::vector<Ent> TH[4] = {
        {{1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {4, 4, 1}},
        {{1, 2, 1}, {2, 1, 1}, {3, 4, 1}, {4, 3, 1}},
        {{1, 3, 1}, {3, 1, 1}, {2, 4, 1}, {4, 2, 1}},
        {{1, 4, 1}, {4, 1, 1}, {2, 3, 1}, {3, 2, 1}},
    };
    const std::vector<Ent> TT[4] = {
        {{1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {4, 4, 1}},
        {{1, 2, 1}, {2, 1, -1}, {3, 4, 1}, {4, 3, -1}},
        {{1, 3, 1}, {2, 4, 1}, {3, 1, -1}, {4, 2, -1}},
        {{1, 4, 1}, {2, 3, -1}, {3, 2, -1}, {4, 1, 1}},
    };

    auto ename = [&](int a, int i, int j) {
        return "E^" + degree_str(ctx->element(a)) + "[" + std::to_string(i) + "," +
               std::to_string(j) + "]";
    };

    std::vector<BasisElement> basis;
    for (int a = 0; a < 4; ++a)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Mat d(NC, total, total);
                for (const auto& e : TH[a])
                    d.at((e.p - 1) * un + i - 1, (e.q - 1) * un + j - 1) = rat(e.s);
                basis.push_back({ename(a, i, j), a, GradedMatrix::from_dense(sp, d)});
            }

    CatalogEntry entry("q" + std::to_string(n),
                       ColorAlgebra::from_representation(sp, std::move(basis)));
    const ColorAlgebra& alg = entry.algebra;

    for (int i = 1; i <= n; ++i) {
        entry.cartan.push_back(ename(0, i, i));
        entry.root_coord_names.push_back("e" + std::to_string(i));
    }

    for (int a = 0; a < 4; ++a) {
        Mat d(NC, total, total);
        for (const auto& e : TT[a])
            for (size_t k = 0; k < un; ++k)
                d.at((e.p - 1) * un + k, (e.q - 1) * un + k) = rat(e.s);
        entry.expected_commutants.emplace(a, GradedMatrix::from_dense(sp, d));
    }

    entry.normalization = rat(1, 4);
    int mu11 = 3;
    entry.degenerate_form_degrees = {0, 1, 2};
    entry.golden_complete = {mu11};

    auto& g11 = entry.golden_eta[mu11];
    for (int a = 0; a < 4; ++a) {
        int b = ctx->add_code(a, mu11);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                g11.push_back({ename(a, i, j), ename(b, j, i), ctx->omega(a, mu11)});
    }
    entry.golden_eta_inv[mu11] = g11;

    auto idx = [&](const std::string& s) { return alg.find(s); };
    auto& c11 = entry.golden_casimir[mu11];
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            c11.push_back({idx(ename(0, i, j)), idx(ename(3, j, i)), rat(1)});
            c11.push_back({idx(ename(1, i, j)), idx(ename(2, j, i)), rat(-1)});
            c11.push_back({idx(ename(2, i, j)), idx(ename(1, j, i)), rat(-1)});
            c11.push_back({idx(ename(3, i, j)), idx(ename(0, j, i)), rat(1)});
        }
    return entry;
}

// ---------------------------------------------------------------------------
// Z3xZ3 sl(2) family
// ---------------------------------------------------------------------------

CatalogEntry build_z32_sl2() {
    std::vector<GroupElement> order = {{0, 0}, {1, 1}, {2, 2}, {0, 2}, {2, 1},
                                       {1, 0}, {0, 1}, {1, 2}, {2, 0}};
    auto ctx = std::make_shared<GradingContext>(
        std::vector<int>{3, 3}, Bicharacter{3, {{0, 1}, {-1, 0}}},
        Bicharacter{3, {{0, 1}, {0, 0}}}, NC, order);
    GradedSpace sp(ctx, {1, 1, 1, 1, 1, 1, 0, 0, 0});

    // weight carried by each of the six nonempty one-dimensional blocks
    const int w[6] = {1, 1, 1, -1, -1, -1};

    auto make = [&](const std::string& nm, GroupElement alpha, int type) {
        int ac = ctx->code(alpha);
        GradedMatrix mat(sp);
        for (int s = 0; s < 6; ++s) {
            int factor;
            if (type == 0)
                factor = w[s];
            else if (type > 0)
                factor = (w[s] == -1) ? 1 : 0;
            else
                factor = (w[s] == 1) ? 1 : 0;
            if (factor == 0) continue;
            int t = ctx->add_code(ac, s);
            mat = mat + GradedMatrix::unit(sp, t, s, 1, 1).scaled(ctx->sigma(ac, s) * rat(factor));
        }
        return BasisElement{nm, ac, mat};
    };

    std::vector<BasisElement> basis = {
        make("H^00", {0, 0}, 0),   make("H^11", {1, 1}, 0),   make("H^22", {2, 2}, 0),
        make("E+^01", {0, 1}, 1),  make("E+^12", {1, 2}, 1),  make("E+^20", {2, 0}, 1),
        make("E-^02", {0, 2}, -1), make("E-^21", {2, 1}, -1), make("E-^10", {1, 0}, -1),
    };

    CatalogEntry entry("z32-sl2", ColorAlgebra::from_representation(sp, std::move(basis)));
    const ColorAlgebra& alg = entry.algebra;

    entry.cartan = {"H^00"};
    entry.root_coord_names = {"h"};
    entry.normalization = rat(1, 6);

    Cyc xi = Cyc::root_of_unity(NC, 4);
    Cyc xi2 = xi * xi;

    struct MEnt {
        int r, c;
        Cyc v;
    };
    auto build_m = [&](const std::vector<MEnt>& ents) {
        GradedMatrix m(sp);
        for (const auto& e : ents) m = m + GradedMatrix::unit(sp, e.r, e.c, 1, 1).scaled(e.v);
        return m;
    };
    entry.expected_commutants.emplace(0, GradedMatrix::identity(sp));
    entry.expected_commutants.emplace(
        1, build_m({{0, 2, rat(1)}, {1, 0, xi}, {2, 1, xi2}, {3, 4, xi2}, {4, 5, xi}, {5, 3, rat(1)}}));
    entry.expected_commutants.emplace(
        2, build_m({{0, 1, rat(1)}, {1, 2, xi2}, {2, 0, xi}, {3, 5, xi}, {4, 3, xi2}, {5, 4, rat(1)}}));

    entry.golden_complete = {0, 1, 2};
    Cyc h = rat(1, 2);

    entry.golden_eta[0] = {
        {"H^00", "H^00", rat(1)},   {"H^11", "H^22", xi2},      {"H^22", "H^11", xi2},
        {"E+^01", "E-^02", h},      {"E-^02", "E+^01", h},      {"E+^20", "E-^10", h},
        {"E-^10", "E+^20", h},      {"E+^12", "E-^21", xi * h}, {"E-^21", "E+^12", xi * h},
    };
    entry.golden_eta[1] = {
        {"H^00", "H^11", rat(1)},   {"H^11", "H^00", rat(1)},    {"H^22", "H^22", xi},
        {"E+^12", "E-^02", h},      {"E+^20", "E-^21", h},       {"E+^01", "E-^10", xi * h},
        {"E-^02", "E+^12", xi2 * h}, {"E-^21", "E+^20", xi2 * h}, {"E-^10", "E+^01", h},
    };
    entry.golden_eta[2] = {
        {"H^00", "H^22", rat(1)},    {"H^22", "H^00", rat(1)},    {"H^11", "H^11", xi},
        {"E+^01", "E-^21", xi2 * h}, {"E+^12", "E-^10", xi2 * h}, {"E+^20", "E-^02", h},
        {"E-^21", "E+^01", h},       {"E-^10", "E+^12", h},       {"E-^02", "E+^20", xi * h},
    };
    entry.golden_eta_inv[0] = {
        {"H^00", "H^00", rat(1)},    {"H^11", "H^22", xi},        {"H^22", "H^11", xi},
        {"E+^01", "E-^02", rat(2)},  {"E-^02", "E+^01", rat(2)},  {"E+^12", "E-^21", rat(2) * xi2},
        {"E-^21", "E+^12", rat(2) * xi2}, {"E+^20", "E-^10", rat(2)}, {"E-^10", "E+^20", rat(2)},
    };
    entry.golden_eta_inv[1] = {
        {"H^00", "H^11", rat(1)},   {"H^11", "H^00", rat(1)},   {"H^22", "H^22", xi2},
        {"E+^12", "E-^02", rat(2) * xi}, {"E+^20", "E-^21", rat(2) * xi}, {"E+^01", "E-^10", rat(2)},
        {"E-^02", "E+^12", rat(2)}, {"E-^21", "E+^20", rat(2)}, {"E-^10", "E+^01", rat(2) * xi2},
    };
    entry.golden_eta_inv[2] = {
        {"H^00", "H^22", rat(1)},   {"H^22", "H^00", rat(1)},   {"H^11", "H^11", xi2},
        {"E+^01", "E-^21", rat(2)}, {"E+^12", "E-^10", rat(2)}, {"E+^20", "E-^02", rat(2) * xi2},
        {"E-^21", "E+^01", rat(2) * xi}, {"E-^10", "E+^12", rat(2) * xi}, {"E-^02", "E+^20", rat(2)},
    };

    auto idx = [&](const std::string& s) { return alg.find(s); };
    auto prod = [&](std::vector<RawQuadTerm>& v, const std::string& x, const std::string& y,
                    const Cyc& co) { v.push_back({idx(x), idx(y), co}); };
    auto acom = [&](std::vector<RawQuadTerm>& v, const std::string& x, const std::string& y,
                    const Cyc& co) {
        prod(v, x, y, co);
        prod(v, y, x, co);
    };

    auto& c00 = entry.golden_casimir[0];
    prod(c00, "H^00", "H^00", rat(1));
    acom(c00, "H^11", "H^22", xi);
    acom(c00, "E+^01", "E-^02", rat(2));
    acom(c00, "E+^20", "E-^10", rat(2));
    acom(c00, "E+^12", "E-^21", rat(2) * xi2);

    auto& c11 = entry.golden_casimir[1];
    acom(c11, "H^00", "H^11", rat(1));
    prod(c11, "H^22", "H^22", xi2);
    prod(c11, "E+^12", "E-^02", rat(2) * xi);
    prod(c11, "E-^02", "E+^12", rat(2));
    prod(c11, "E+^20", "E-^21", rat(2) * xi);
    prod(c11, "E-^21", "E+^20", rat(2));
    prod(c11, "E+^01", "E-^10", rat(2));
    prod(c11, "E-^10", "E+^01", rat(2) * xi2);

    auto& c22 = entry.golden_casimir[2];
    acom(c22, "H^00", "H^22", rat(1));
    prod(c22, "H^11", "H^11", xi2);
    prod(c22, "E+^01", "E-^21", rat(2));
    prod(c22, "E-^21", "E+^01", rat(2) * xi);
    prod(c22, "E+^12", "E-^10", rat(2));
    prod(c22, "E-^10", "E+^12", rat(2) * xi);
    prod(c22, "E+^20", "E-^02", rat(2) * xi2);
    prod(c22, "E-^02", "E+^20", rat(2));

    return entry;
}

// ---------------------------------------------------------------------------
// osp(m|2n) family
// ---------------------------------------------------------------------------

namespace {

struct Ix {
    int k = 0;
    bool primed = false;
    bool greek = false;
    bool super = false;
    bool is_m = false;
};

Ix bar(Ix x) {
    if (!x.is_m) x.primed = !x.primed;
    return x;
}
Ix up(Ix x) {
    x.super = true;
    return x;
}

std::string ix_token(const Ix& x) {
    std::string s = x.greek ? "g" + std::to_string(x.k)
                            : (x.is_m ? "m" : std::to_string(x.k));
    if (x.primed) s += "'";
    return s;
}

std::string ix_name(const char* fam, const Ix& a, const Ix& b) {
    return std::string(fam) + "[" + ix_token(a) + "," + ix_token(b) + "]";
}

} // namespace

CatalogEntry build_osp(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("osp requires m >= 1 and n >= 1");
    int ell = m / 2;
    bool odd = (m % 2 != 0);

    std::vector<GroupElement> order = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    auto ctx = std::make_shared<GradingContext>(std::vector<int>{2, 2},
                                                Bicharacter{2, {{1, 0}, {0, 1}}}, std::nullopt,
                                                NC, order);
    GradedSpace sp(ctx, {static_cast<size_t>(m), static_cast<size_t>(m),
                         static_cast<size_t>(2 * n), static_cast<size_t>(2 * n)});
    size_t total = sp.total_dim();

    auto pos = [&](const Ix& x) -> size_t {
        size_t p;
        if (!x.greek) {
            if (x.is_m)
                p = static_cast<size_t>(m) - 1;
            else
                p = static_cast<size_t>((x.primed ? ell : 0) + x.k - 1);
            if (x.super) p += m;
        } else {
            p = 2 * static_cast<size_t>(m) + (x.primed ? n : 0) + x.k - 1;
            if (x.super) p += 2 * n;
        }
        return p;
    };
    auto put = [&](Mat& d, const Ix& r, const Ix& c, int s) { d.at(pos(r), pos(c)) = rat(s); };

    // Second-index-lowered families (T, Lambda): E(a,b) + E(^a,^b) and,
    // unless the element is a two-term diagonal one, s*(E(b~,a~) + E(^b~,^a~))
    // with ~ toggling the prime.
    auto make_sub = [&](const char* fam, Ix a, Ix b, int s, bool twoterm) {
        Mat d(NC, total, total);
        put(d, a, b, 1);
        put(d, up(a), up(b), 1);
        if (!twoterm) {
            put(d, bar(b), bar(a), s);
            put(d, up(bar(b)), up(bar(a)), s);
        }
        GradedMatrix gm = GradedMatrix::from_dense(sp, d);
        return BasisElement{ix_name(fam, a, b), gm.degree(), gm};
    };
    // Second-index-raised families (U, Gamma).
    auto make_sup = [&](const char* fam, Ix a, Ix b, int s, bool twoterm) {
        Mat d(NC, total, total);
        put(d, a, up(b), 1);
        put(d, up(a), b, 1);
        if (!twoterm) {
            put(d, bar(b), up(bar(a)), s);
            put(d, up(bar(b)), bar(a), s);
        }
        GradedMatrix gm = GradedMatrix::from_dense(sp, d);
        return BasisElement{ix_name(fam, a, b), gm.degree(), gm};
    };

    auto li = [](int k) { return Ix{k, false, false, false, false}; };
    auto lip = [](int k) { return Ix{k, true, false, false, false}; };
    auto lm = []() { return Ix{0, false, false, false, true}; };
    auto gk = [](int k) { return Ix{k, false, true, false, false}; };
    auto gkp = [](int k) { return Ix{k, true, true, false, false}; };

    std::vector<BasisElement> basis;
    // so(m)/sp(2n) style families, first with the second index lowered (degree
    // 00) and then raised (degree 11), then the mixed families (01 and 10).
    for (int pass = 0; pass < 2; ++pass) {
        const char* fam = pass == 0 ? "T" : "U";
        auto mk = [&](Ix a, Ix b, int s, bool two) {
            basis.push_back(pass == 0 ? make_sub(fam, a, b, s, two) : make_sup(fam, a, b, s, two));
        };
        for (int i = 1; i <= ell; ++i) {
            for (int j = 1; j <= ell; ++j) mk(li(i), li(j), -1, false);
            if (odd) mk(li(i), lm(), -1, false);
        }
        for (int i = 1; i <= ell; ++i)
            for (int j = i + 1; j <= ell; ++j) mk(li(i), lip(j), -1, false);
        for (int i = 1; i <= ell; ++i) {
            for (int j = i + 1; j <= ell; ++j) mk(lip(i), li(j), -1, false);
            if (odd) mk(lip(i), lm(), -1, false);
        }
        for (int mu = 1; mu <= n; ++mu)
            for (int nu = 1; nu <= n; ++nu) mk(gk(mu), gk(nu), -1, false);
        for (int mu = 1; mu <= n; ++mu)
            for (int nu = mu; nu <= n; ++nu) mk(gk(mu), gkp(nu), 1, nu == mu);
        for (int mu = 1; mu <= n; ++mu)
            for (int nu = mu; nu <= n; ++nu) mk(gkp(mu), gk(nu), 1, nu == mu);
    }
    auto latin_loop = [&](bool with_m, auto body) {
        for (int i = 1; i <= ell; ++i) body(li(i));
        if (odd && with_m) body(lm());
    };
    latin_loop(true, [&](Ix a) {
        for (int mu = 1; mu <= n; ++mu) basis.push_back(make_sub("L", a, gk(mu), -1, false));
    });
    latin_loop(true, [&](Ix a) {
        for (int mu = 1; mu <= n; ++mu) basis.push_back(make_sub("L", a, gkp(mu), 1, false));
    });
    for (int i = 1; i <= ell; ++i)
        for (int mu = 1; mu <= n; ++mu) basis.push_back(make_sub("L", lip(i), gk(mu), -1, false));
    for (int i = 1; i <= ell; ++i)
        for (int mu = 1; mu <= n; ++mu) basis.push_back(make_sub("L", lip(i), gkp(mu), 1, false));
    latin_loop(true, [&](Ix a) {
        for (int mu = 1; mu <= n; ++mu) basis.push_back(make_sup("G", a, gk(mu), 1, false));
    });
    latin_loop(true, [&](Ix a) {
        for (int mu = 1; mu <= n; ++mu) basis.push_back(make_sup("G", a, gkp(mu), -1, false));
    });
    for (int i = 1; i <= ell; ++i)
        for (int mu = 1; mu <= n; ++mu) basis.push_back(make_sup("G", lip(i), gk(mu), 1, false));
    for (int i = 1; i <= ell; ++i)
        for (int mu = 1; mu <= n; ++mu) basis.push_back(make_sup("G", lip(i), gkp(mu), -1, false));

    CatalogEntry entry("osp-" + std::to_string(m) + "-" + std::to_string(n),
                       ColorAlgebra::from_representation(sp, std::move(basis)));
    const ColorAlgebra& alg = entry.algebra;

    for (int i = 1; i <= ell; ++i) {
        entry.cartan.push_back(ix_name("T", li(i), li(i)));
        entry.root_coord_names.push_back("e" + std::to_string(i));
    }
    for (int mu = 1; mu <= n; ++mu) {
        entry.cartan.push_back(ix_name("T", gk(mu), gk(mu)));
        entry.root_coord_names.push_back("d" + std::to_string(mu));
    }

    // J = diag(i*B_m, i*B_m, G_2n, G_2n); the per-degree scalars implement
    // the defining conditions X J + c J X^T = 0 with c = (1, 1, i, -i).
    Cyc iu = Cyc::root_of_unity(NC, 3);
    Mat J(NC, total, total);
    for (size_t off : {size_t(0), static_cast<size_t>(m)}) {
        for (int k = 1; k <= ell; ++k) {
            J.at(off + k - 1, off + ell + k - 1) = iu;
            J.at(off + ell + k - 1, off + k - 1) = iu;
        }
        if (odd) J.at(off + m - 1, off + m - 1) = iu;
    }
    for (size_t off : {2 * static_cast<size_t>(m), 2 * static_cast<size_t>(m) + 2 * n}) {
        for (int k = 0; k < n; ++k) {
            J.at(off + k, off + n + k) = rat(-1);
            J.at(off + n + k, off + k) = rat(1);
        }
    }
    entry.jform = JForm{sp, J, FormSymmetry::none,
                        {{0, rat(1)}, {1, rat(1)}, {2, -iu}, {3, iu}}};

    Mat m11(NC, total, total);
    for (int k = 0; k < m; ++k) {
        m11.at(k, m + k) = rat(1);
        m11.at(m + k, k) = rat(1);
    }
    for (int k = 0; k < 2 * n; ++k) {
        m11.at(2 * m + k, 2 * m + 2 * n + k) = rat(-1);
        m11.at(2 * m + 2 * n + k, 2 * m + k) = rat(-1);
    }
    entry.expected_commutants.emplace(0, GradedMatrix::identity(sp));
    entry.expected_commutants.emplace(1, GradedMatrix::from_dense(sp, m11));

    entry.normalization = rat(1, 4);

    auto nm = [&](const char* fam, Ix a, Ix b) { return ix_name(fam, a, b); };
    auto P = [&](std::map<int, std::vector<GoldenPair>>& tab, int mu, const std::string& a,
                 const std::string& b, const Cyc& v) { tab[mu].push_back({a, b, v}); };
    auto& ge = entry.golden_eta;
    auto& gi = entry.golden_eta_inv;

    for (int i = 1; i <= ell; ++i)
        for (int j = 1; j <= ell; ++j)
            for (auto* tab : {&ge, &gi}) {
                P(*tab, 0, nm("T", li(i), li(j)), nm("T", li(j), li(i)), rat(1));
                P(*tab, 0, nm("U", li(i), li(j)), nm("U", li(j), li(i)), rat(1));
                P(*tab, 1, nm("T", li(i), li(j)), nm("U", li(j), li(i)), rat(1));
            }
    for (int i = 1; i <= ell; ++i)
        for (int j = i + 1; j <= ell; ++j)
            for (auto* tab : {&ge, &gi}) {
                P(*tab, 0, nm("T", li(i), lip(j)), nm("T", lip(i), li(j)), rat(-1));
                P(*tab, 0, nm("U", li(i), lip(j)), nm("U", lip(i), li(j)), rat(-1));
                P(*tab, 1, nm("T", li(i), lip(j)), nm("U", lip(i), li(j)), rat(-1));
                P(*tab, 1, nm("T", lip(i), li(j)), nm("U", li(i), lip(j)), rat(-1));
            }
    if (odd)
        for (int i = 1; i <= ell; ++i)
            for (auto* tab : {&ge, &gi}) {
                P(*tab, 0, nm("T", li(i), lm()), nm("T", lip(i), lm()), rat(-1));
                P(*tab, 0, nm("U", li(i), lm()), nm("U", lip(i), lm()), rat(-1));
                P(*tab, 1, nm("T", li(i), lm()), nm("U", lip(i), lm()), rat(-1));
                P(*tab, 1, nm("T", lip(i), lm()), nm("U", li(i), lm()), rat(-1));
            }
    for (int mu = 1; mu <= n; ++mu)
        for (int nu = 1; nu <= n; ++nu)
            for (auto* tab : {&ge, &gi}) {
                P(*tab, 0, nm("T", gk(mu), gk(nu)), nm("T", gk(nu), gk(mu)), rat(-1));
                P(*tab, 0, nm("U", gk(mu), gk(nu)), nm("U", gk(nu), gk(mu)), rat(-1));
                P(*tab, 1, nm("T", gk(mu), gk(nu)), nm("U", gk(nu), gk(mu)), rat(1));
            }
    for (int mu = 1; mu <= n; ++mu)
        for (int nu = mu + 1; nu <= n; ++nu)
            for (auto* tab : {&ge, &gi}) {
                P(*tab, 0, nm("T", gk(mu), gkp(nu)), nm("T", gkp(mu), gk(nu)), rat(-1));
                P(*tab, 0, nm("U", gk(mu), gkp(nu)), nm("U", gkp(mu), gk(nu)), rat(-1));
                P(*tab, 1, nm("T", gk(mu), gkp(nu)), nm("U", gkp(mu), gk(nu)), rat(1));
                P(*tab, 1, nm("T", gkp(mu), gk(nu)), nm("U", gk(mu), gkp(nu)), rat(1));
            }
    for (int mu = 1; mu <= n; ++mu) {
        P(ge, 0, nm("T", gk(mu), gkp(mu)), nm("T", gkp(mu), gk(mu)), rat(-1, 2));
        P(ge, 0, nm("U", gk(mu), gkp(mu)), nm("U", gkp(mu), gk(mu)), rat(-1, 2));
        P(ge, 1, nm("T", gk(mu), gkp(mu)), nm("U", gkp(mu), gk(mu)), rat(1, 2));
        P(ge, 1, nm("T", gkp(mu), gk(mu)), nm("U", gk(mu), gkp(mu)), rat(1, 2));
        P(gi, 0, nm("T", gk(mu), gkp(mu)), nm("T", gkp(mu), gk(mu)), rat(-2));
        P(gi, 0, nm("U", gk(mu), gkp(mu)), nm("U", gkp(mu), gk(mu)), rat(-2));
        P(gi, 1, nm("T", gk(mu), gkp(mu)), nm("U", gkp(mu), gk(mu)), rat(2));
        P(gi, 1, nm("T", gkp(mu), gk(mu)), nm("U", gk(mu), gkp(mu)), rat(2));
    }
    for (int i = 1; i <= ell; ++i)
        for (int mu = 1; mu <= n; ++mu) {
            P(ge, 0, nm("L", li(i), gk(mu)), nm("L", lip(i), gkp(mu)), rat(1));
            P(ge, 0, nm("L", li(i), gkp(mu)), nm("L", lip(i), gk(mu)), rat(-1));
            P(ge, 0, nm("G", li(i), gk(mu)), nm("G", lip(i), gkp(mu)), rat(-1));
            P(ge, 0, nm("G", li(i), gkp(mu)), nm("G", lip(i), gk(mu)), rat(1));
            P(gi, 0, nm("L", li(i), gk(mu)), nm("L", lip(i), gkp(mu)), rat(-1));
            P(gi, 0, nm("L", li(i), gkp(mu)), nm("L", lip(i), gk(mu)), rat(1));
            P(gi, 0, nm("G", li(i), gk(mu)), nm("G", lip(i), gkp(mu)), rat(1));
            P(gi, 0, nm("G", li(i), gkp(mu)), nm("G", lip(i), gk(mu)), rat(-1));
            for (auto* tab : {&ge, &gi}) {
                P(*tab, 1, nm("L", li(i), gk(mu)), nm("G", lip(i), gkp(mu)), rat(1));
                P(*tab, 1, nm("L", li(i), gkp(mu)), nm("G", lip(i), gk(mu)), rat(-1));
                P(*tab, 1, nm("L", lip(i), gk(mu)), nm("G", li(i), gkp(mu)), rat(1));
                P(*tab, 1, nm("L", lip(i), gkp(mu)), nm("G", li(i), gk(mu)), rat(-1));
            }
        }
    if (odd)
        for (int mu = 1; mu <= n; ++mu) {
            P(ge, 0, nm("L", lm(), gk(mu)), nm("L", lm(), gkp(mu)), rat(1));
            P(ge, 0, nm("G", lm(), gk(mu)), nm("G", lm(), gkp(mu)), rat(-1));
            P(gi, 0, nm("L", lm(), gk(mu)), nm("L", lm(), gkp(mu)), rat(-1));
            P(gi, 0, nm("G", lm(), gk(mu)), nm("G", lm(), gkp(mu)), rat(1));
            for (auto* tab : {&ge, &gi}) {
                P(*tab, 1, nm("L", lm(), gk(mu)), nm("G", lm(), gkp(mu)), rat(1));
                P(*tab, 1, nm("L", lm(), gkp(mu)), nm("G", lm(), gk(mu)), rat(-1));
            }
        }

    auto idx = [&](const std::string& s) { return alg.find(s); };
    auto prod = [&](std::vector<RawQuadTerm>& v, const std::string& x, const std::string& y,
                    long num) { v.push_back({idx(x), idx(y), rat(num)}); };
    auto acom = [&](std::vector<RawQuadTerm>& v, const std::string& x, const std::string& y,
                    long num) {
        prod(v, x, y, num);
        prod(v, y, x, num);
    };
    auto com = [&](std::vector<RawQuadTerm>& v, const std::string& x, const std::string& y,
                   long num) {
        prod(v, x, y, num);
        prod(v, y, x, -num);
    };

    auto& c00 = entry.golden_casimir[0];
    for (int i = 1; i <= ell; ++i)
        for (int j = 1; j <= ell; ++j) {
            prod(c00, nm("T", li(i), li(j)), nm("T", li(j), li(i)), 1);
            prod(c00, nm("U", li(i), li(j)), nm("U", li(j), li(i)), 1);
        }
    for (int i = 1; i <= ell; ++i)
        for (int j = i + 1; j <= ell; ++j) {
            acom(c00, nm("T", li(i), lip(j)), nm("T", lip(i), li(j)), -1);
            acom(c00, nm("U", li(i), lip(j)), nm("U", lip(i), li(j)), -1);
        }
    if (odd)
        for (int i = 1; i <= ell; ++i) {
            acom(c00, nm("T", li(i), lm()), nm("T", lip(i), lm()), -1);
            acom(c00, nm("U", li(i), lm()), nm("U", lip(i), lm()), -1);
        }
    for (int mu = 1; mu <= n; ++mu)
        for (int nu = 1; nu <= n; ++nu) {
            prod(c00, nm("T", gk(mu), gk(nu)), nm("T", gk(nu), gk(mu)), -1);
            prod(c00, nm("U", gk(mu), gk(nu)), nm("U", gk(nu), gk(mu)), -1);
        }
    for (int mu = 1; mu <= n; ++mu) {
        acom(c00, nm("T", gk(mu), gkp(mu)), nm("T", gkp(mu), gk(mu)), -2);
        acom(c00, nm("U", gk(mu), gkp(mu)), nm("U", gkp(mu), gk(mu)), -2);
    }
    for (int mu = 1; mu <= n; ++mu)
        for (int nu = mu + 1; nu <= n; ++nu) {
            acom(c00, nm("T", gk(mu), gkp(nu)), nm("T", gkp(mu), gk(nu)), -1);
            acom(c00, nm("U", gk(mu), gkp(nu)), nm("U", gkp(mu), gk(nu)), -1);
        }
    for (int i = 1; i <= ell; ++i)
        for (int mu = 1; mu <= n; ++mu) {
            com(c00, nm("L", lip(i), gkp(mu)), nm("L", li(i), gk(mu)), 1);
            com(c00, nm("L", li(i), gkp(mu)), nm("L", lip(i), gk(mu)), 1);
            com(c00, nm("G", li(i), gk(mu)), nm("G", lip(i), gkp(mu)), 1);
            com(c00, nm("G", lip(i), gk(mu)), nm("G", li(i), gkp(mu)), 1);
        }
    if (odd)
        for (int mu = 1; mu <= n; ++mu) {
            com(c00, nm("L", lm(), gkp(mu)), nm("L", lm(), gk(mu)), 1);
            com(c00, nm("G", lm(), gk(mu)), nm("G", lm(), gkp(mu)), 1);
        }

    auto& c11 = entry.golden_casimir[1];
    for (int i = 1; i <= ell; ++i)
        for (int j = 1; j <= ell; ++j) acom(c11, nm("T", li(i), li(j)), nm("U", li(j), li(i)), 1);
    for (int i = 1; i <= ell; ++i)
        for (int j = i + 1; j <= ell; ++j) {
            acom(c11, nm("T", li(i), lip(j)), nm("U", lip(i), li(j)), -1);
            acom(c11, nm("T", lip(i), li(j)), nm("U", li(i), lip(j)), -1);
        }
    if (odd)
        for (int i = 1; i <= ell; ++i) {
            acom(c11, nm("T", li(i), lm()), nm("U", lip(i), lm()), -1);
            acom(c11, nm("T", lip(i), lm()), nm("U", li(i), lm()), -1);
        }
    for (int mu = 1; mu <= n; ++mu)
        for (int nu = 1; nu <= n; ++nu)
            acom(c11, nm("T", gk(mu), gk(nu)), nm("U", gk(nu), gk(mu)), 1);
    for (int mu = 1; mu <= n; ++mu) {
        acom(c11, nm("T", gk(mu), gkp(mu)), nm("U", gkp(mu), gk(mu)), 2);
        acom(c11, nm("T", gkp(mu), gk(mu)), nm("U", gk(mu), gkp(mu)), 2);
    }
    for (int mu = 1; mu <= n; ++mu)
        for (int nu = mu + 1; nu <= n; ++nu) {
            acom(c11, nm("T", gk(mu), gkp(nu)), nm("U", gkp(mu), gk(nu)), 1);
            acom(c11, nm("T", gkp(mu), gk(nu)), nm("U", gk(mu), gkp(nu)), 1);
        }
    for (int i = 1; i <= ell; ++i)
        for (int mu = 1; mu <= n; ++mu) {
            acom(c11, nm("L", li(i), gk(mu)), nm("G", lip(i), gkp(mu)), 1);
            acom(c11, nm("L", li(i), gkp(mu)), nm("G", lip(i), gk(mu)), -1);
            acom(c11, nm("L", lip(i), gk(mu)), nm("G", li(i), gkp(mu)), 1);
            acom(c11, nm("L", lip(i), gkp(mu)), nm("G", li(i), gk(mu)), -1);
        }
    if (odd)
        for (int mu = 1; mu <= n; ++mu) {
            acom(c11, nm("L", lm(), gk(mu)), nm("G", lm(), gkp(mu)), 1);
            acom(c11, nm("L", lm(), gkp(mu)), nm("G", lm(), gk(mu)), -1);
        }

    return entry;
}

// ---------------------------------------------------------------------------

CatalogEntry build_entry(const std::string& name, int m, int n) {
    if (name == "qn") return build_qn(n);
    if (name == "z32-sl2") return build_z32_sl2();
    if (name == "osp") return build_osp(m, n);
    throw std::invalid_argument("unknown catalog family: " + name);
}

std::vector<std::string> catalog_names() { return {"qn", "z32-sl2", "osp"}; }

RootSystem extract_roots(const CatalogEntry& entry) {
    return extract_roots(entry.algebra, entry.cartan);
}

RootSystem extract_roots(const ColorAlgebra& alg, const std::vector<std::string>& cartan) {
    std::vector<int> h;
    for (const auto& nm : cartan) {
        int k = alg.find(nm);
        if (k < 0) throw std::invalid_argument("unknown Cartan element: " + nm);
        h.push_back(k);
    }
    RootSystem rs;
    for (size_t x = 0; x < alg.dim(); ++x) {
        if (std::find(h.begin(), h.end(), static_cast<int>(x)) != h.end()) continue;
        RootVector rv;
        rv.coords.reserve(h.size());
        bool ok = true;
        for (int hi : h) {
            const FRow& row = alg.f(hi, x);
            if (row.empty()) {
                rv.coords.emplace_back(0);
                continue;
            }
            if (row.size() != 1 || row[0].first != static_cast<int>(x) ||
                !row[0].second.is_rational()) {
                ok = false;
                break;
            }
            rv.coords.push_back(row[0].second.rational_part());
        }
        if (!ok) {
            rs.errors.push_back(alg.basis(x).name);
            continue;
        }
        RootAssignment ra{alg.basis(x).name, alg.basis(x).degree, std::move(rv)};
        (ra.root.is_zero() ? rs.zero_roots : rs.roots).push_back(std::move(ra));
    }
    return rs;
}

bool proportional(const GradedMatrix& x, const GradedMatrix& y) {
    if (x.is_zero() || y.is_zero()) return x.is_zero() == y.is_zero();
    Mat dx = x.dense(), dy = y.dense();
    for (size_t i = 0; i < dx.rows(); ++i)
        for (size_t j = 0; j < dx.cols(); ++j) {
            if (dx.at(i, j).is_zero()) {
                if (!dy.at(i, j).is_zero()) return false;
                continue;
            }
            Cyc s = dy.at(i, j) / dx.at(i, j);
            if (s.is_zero()) return false;
            return y == x.scaled(s);
        }
    return false;
}

} // namespace cla
