#include "suite.hpp"

namespace spinweil {

namespace suite {

namespace {

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

Rng::Rng(std::uint64_t seed, const std::string& name)
{
    const std::uint64_t h = fnv1a(name);
    std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(h),
                     static_cast<std::uint32_t>(h >> 32)};
    g_.seed(ss);
}

long Rng::nonzero(long bound)
{
    const long v = uniform(1, bound);
    return uniform(0, 1) ? v : -v;
}

Rational Rng::rational()
{
    Rational r(uniform(-5, 5));
    r /= uniform(1, 3);
    return r;
}

RVec Rng::vec(std::size_t n, long bound)
{
    RVec v(n);
    for (auto& x : v) x = uniform(-bound, bound);
    return v;
}

FieldElem Rng::field(const Tower* t)
{
    const bool f = t->f_is_q();
    return FieldElem(t, rational(), f ? Rational(0) : rational(), rational(), f ? Rational(0) : rational());
}

FieldElem Rng::k_minus(const Tower* t)
{
    Rational a = nonzero(4), b = t->f_is_q() ? Rational(0) : Rational(uniform(-3, 3));
    return FieldElem(t, 0, 0, a, b);
}

RMV Rng::mv(const SpacePtr& sp, int terms)
{
    RMV out(sp);
    const long top = static_cast<long>(full_mask(sp->arity()));
    for (int i = 0; i < terms; ++i) out.add_term(static_cast<Mask>(uniform(0, top)), Rational(nonzero(4)));
    return out;
}

RMV Rng::homogeneous(const SpacePtr& sp, int degree, int terms)
{
    const auto masks = degree_masks(sp->arity(), degree);
    RMV out(sp);
    if (masks.empty()) return out;
    for (int i = 0; i < terms; ++i)
        out.add_term(masks[static_cast<std::size_t>(uniform(0, static_cast<long>(masks.size()) - 1))], Rational(nonzero(4)));
    return out;
}

RMV Rng::bivector(const SpacePtr& sp, int terms) { return homogeneous(sp, 2, terms); }

bool Context::principal_threefold() const
{
    if (ws.n != 3) return false;
    const RMV t3 = wedge(wedge(ws.theta, ws.theta), ws.theta);
    return abs(t3.coeff(full_mask(ws.h->N()))) == 6;
}

const BBData& Context::bb()
{
    if (!bb_) bb_ = bb_data(ws);
    return *bb_;
}

const Pipeline& Context::pipe()
{
    if (!pipe_) {
        Pipeline p;
        p.c1 = preset_ch_ideal_curves(ws);
        p.c2 = dualize(p.c1);
        p.E = transform_pair(ws, p.c1, p.c2, PairVariant::E);
        p.kappa = kappa(p.E);
        p.split = decompose_kappa(ws, degree_part(p.kappa, ws.d));
        pipe_ = std::move(p);
    }
    return *pipe_;
}

KVec kmul(const RMat& m, const KVec& v)
{
    KVec out(m.rows(), FieldElem(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0 && !v[j].is_zero()) out[i] += v[j] * FieldElem(m(i, j));
    return out;
}

KVec to_kvec(const RVec& v) { return to_field(v); }

KVec iota(const KVec& v)
{
    KVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.iota());
    return out;
}

RVec unit_vec(std::size_t n, std::size_t i)
{
    RVec v(n, Rational(0));
    v[i] = 1;
    return v;
}

std::string sign_str(const Rational& r) { return sgn(r) < 0 ? "-" : "+"; }

}  // namespace suite

Report run_all(const WeilDatum& datum, const RunOptions& opt)
{
    using namespace suite;
    const WeilStructure ws = build_weil(datum);
    Context ctx(ws, opt.seed);

    Report rep;
    rep.instance = {{"name", datum.name},
                    {"p", datum.tower.p},
                    {"q", rat_str(datum.tower.q)},
                    {"n", ws.n},
                    {"e", ws.e},
                    {"d", ws.d},
                    {"pipeline", ctx.pipeline()},
                    {"principal", ctx.principal_threefold()},
                    {"seed", opt.seed}};

    std::vector<Declared> decl;
    algebra_checks(decl);
    weil_checks(decl);
    transform_checks(decl, ctx.pipeline(), ctx.principal_threefold());

    for (const auto& d : decl) {
        if (!opt.filter.empty() && d.name.find(opt.filter) == std::string::npos) continue;
        CheckResult r;
        r.name = d.name;
        r.anchor = d.anchor;
        try {
            Rng rng(opt.seed, d.name);
            Outcome o = d.fn(ctx, rng);
            r.pass = o.pass;
            r.witness = std::move(o.witness);
        } catch (const std::exception& e) {
            r.pass = false;
            r.witness = {{"error", e.what()}};
        }
        rep.checks.push_back(std::move(r));
    }
    return rep;
}

Report run_all(const std::string& preset, const RunOptions& opt) { return run_all(preset_datum(preset), opt); }

}  // namespace spinweil
