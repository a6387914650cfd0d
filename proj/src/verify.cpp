#include "ktb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>

#include "ktb/algebra.hpp"
#include "ktb/canonical.hpp"
#include "ktb/graph6.hpp"
#include "ktb/morphisms.hpp"

namespace ktb {

const std::vector<LemmaInfo>& list_lemmas()
{
    static const std::vector<LemmaInfo> catalog = {
        {"axioms", Applicability::any_frame,
         "KTB identities (dia 0 = 0, additivity, x <= dia x, x <= box dia x), monotonicity and self-conjugacy"},
        {"natclo", Applicability::any_frame,
         "gamma-closed x: ~x = dia~dia x and dia~x = dia^2~dia x; dia gamma(x) = dia x"},
        {"nicegen", Applicability::any_frame,
         "y = gamma(dia^(m-1) x) is gamma-closed with dia y != 1 and dia^2 y = 1"},
        {"singletons", Applicability::family_only, "schedule terms evaluate to their named sets up to index p-4"},
        {"embed", Applicability::family_only, "{B u D u L, rest} is stable with quotient K2"},
        {"simple", Applicability::any_frame, "x != 0 implies dia^5 x = 1"},
        {"clo", Applicability::family_only, "gamma-closed x with dia x != 1, dia^2 x = 1 has dia~x != 1"},
        {"ddd", Applicability::family_only, "x != 0 with dia^4 x != 1 is D or has dia^4 x = ~D"},
        {"subD", Applicability::family_only,
         "finite analog: P-free x != 0 yields D among ~dia^2 x, ~dia^3 x, ~dia^4 x (parts i-iii)"},
        {"small_analog", Applicability::any_frame,
         "no stable partition with at least 3 blocks has a complete quotient"},
        {"diff", Applicability::family_only,
         "distinguishing term gives U_i on one side and U_i u U_(i+1) on the other"},
        {"big_analog", Applicability::family_only, "cover test on the truncation", true},
    };
    return catalog;
}

namespace {

struct Context {
    Frame frame;
    std::optional<FamilyFrame> family;
    std::vector<Subset> atoms;
    std::string description;
};

Context make_context(const VerifyTarget& target)
{
    Context c;
    if (const auto* spec = std::get_if<FamilySpec>(&target)) {
        c.family = build_truncation(*spec);
        c.frame = c.family->frame;
        const Subset gen = c.family->named("D");
        c.atoms = closure(c.frame, std::span(&gen, 1), {"x"}, {.materialize = false}).atoms();
        c.description = "T(" + spec->to_string() + ")";
    } else {
        c.frame = std::get<Frame>(target);
        for (std::size_t v = 0; v < c.frame.size(); ++v)
            c.atoms.push_back(Subset::of(c.frame.size(), {v}));
        c.description = "graph6:" + encode_graph6(c.frame);
    }
    return c;
}

CheckMode resolve_mode(const VerifyOptions& opts, std::size_t atoms)
{
    if (!opts.mode)
        return atoms <= kExhaustiveAtomTier ? CheckMode::exhaustive : CheckMode::sampled;
    if (*opts.mode == CheckMode::exhaustive && atoms > kExhaustiveAtomTier)
        throw Error(Errc::invalid_argument, "exhaustive mode needs at most 2^" +
                                                std::to_string(kExhaustiveAtomTier) + " elements, universe has 2^" +
                                                std::to_string(atoms));
    return *opts.mode;
}

// Visits elements of the universe: all of them in Gray-code order, or `samples` random
// unions of atoms. The visitor returns false to stop.
class Elements {
public:
    Elements(const std::vector<Subset>& atoms, std::size_t width, CheckMode mode, std::uint64_t seed,
             std::uint64_t samples)
        : atoms_(atoms), width_(width), mode_(mode), seed_(seed), samples_(samples)
    {
    }

    template <typename F>
    std::uint64_t for_each(F&& visit) const
    {
        std::uint64_t visited = 0;
        if (mode_ == CheckMode::exhaustive) {
            Subset x(width_);
            ++visited;
            if (!visit(x))
                return visited;
            const std::uint64_t count = std::uint64_t{1} << atoms_.size();
            for (std::uint64_t i = 1; i < count; ++i) {
                x ^= atoms_[static_cast<std::size_t>(std::countr_zero(i))];
                ++visited;
                if (!visit(x))
                    break;
            }
        } else {
            std::mt19937_64 rng(seed_);
            for (std::uint64_t s = 0; s < samples_; ++s) {
                ++visited;
                if (!visit(random(rng)))
                    break;
            }
        }
        return visited;
    }

    Subset random(std::mt19937_64& rng) const
    {
        Subset x(width_);
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
            if (i % 64 == 0)
                bits = rng();
            if ((bits >> (i % 64)) & 1u)
                x |= atoms_[i];
        }
        return x;
    }

private:
    const std::vector<Subset>& atoms_;
    std::size_t width_;
    CheckMode mode_;
    std::uint64_t seed_;
    std::uint64_t samples_;
};

void require_family(const Context& c, const std::string& id)
{
    if (!c.family)
        throw Error(Errc::not_applicable, "lemma '" + id + "' applies only to family truncations");
}

Report start(const std::string& id, const Context& c, CheckMode mode, const VerifyOptions& opts)
{
    Report r;
    r.lemma = id;
    r.frame = c.description;
    r.mode = mode;
    r.seed = opts.seed;
    r.details.emplace_back("universe", (c.family ? "subalgebra generated by D, 2^" : "powerset, 2^") +
                                           std::to_string(c.atoms.size()) + " elements");
    return r;
}

Report check_axioms(const Context& c, const VerifyOptions& opts)
{
    const Frame& f = c.frame;
    const CheckMode mode = resolve_mode(opts, c.atoms.size());
    Report r = start("axioms", c, mode, opts);
    Elements elems(c.atoms, f.size(), mode, opts.seed, opts.samples);

    if (!diamond(f, f.empty_set()).empty()) {
        r.fail({{{"X", f.empty_set()}}, {}, "dia 0 != 0"});
        return r;
    }
    r.cases = 1;
    r.cases += elems.for_each([&](const Subset& x) {
        const Subset dx = diamond(f, x);
        if (!x.subset_of(dx)) {
            r.fail({{{"X", x}}, {}, "x <= dia x fails"});
            return false;
        }
        if (!x.subset_of(box(f, dx))) {
            r.fail({{{"X", x}}, {}, "x <= box dia x fails"});
            return false;
        }
        return true;
    });
    if (!r.passed)
        return r;

    auto pair_ok = [&](const Subset& x, const Subset& dx, const Subset& y, const Subset& dy) {
        if (diamond(f, x | y) != (dx | dy)) {
            r.fail({{{"X", x}, {"Y", y}}, {}, "dia(x | y) != dia x | dia y"});
            return false;
        }
        if (x.subset_of(y) && !dx.subset_of(dy)) {
            r.fail({{{"X", x}, {"Y", y}}, {}, "x <= y but dia x </= dia y"});
            return false;
        }
        if (x.intersects(dy) != dx.intersects(y)) {
            r.fail({{{"X", x}, {"Y", y}}, {}, "x & dia y = 0 and dia x & y = 0 disagree"});
            return false;
        }
        return true;
    };

    const bool pairs_exhaustive = mode == CheckMode::exhaustive && c.atoms.size() <= kExhaustivePairAtomTier;
    if (pairs_exhaustive) {
        std::vector<Subset> all, dias;
        elems.for_each([&](const Subset& x) {
            all.push_back(x);
            dias.push_back(diamond(f, x));
            return true;
        });
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < all.size(); ++j) {
                ++r.cases;
                if (!pair_ok(all[i], dias[i], all[j], dias[j]))
                    return r;
            }
    } else {
        r.mode = CheckMode::sampled;
        r.note = "pairs sampled";
        std::mt19937_64 rng(opts.seed ^ 0x5bd1e995u);
        for (std::uint64_t s = 0; s < opts.samples; ++s) {
            Subset x = elems.random(rng), y = elems.random(rng);
            if (s % 4 == 0)
                y |= x; // exercise the monotonicity premise
            ++r.cases;
            if (!pair_ok(x, diamond(f, x), y, diamond(f, y)))
                return r;
        }
    }
    return r;
}

Report check_natclo(const Context& c, const VerifyOptions& opts)
{
    const Frame& f = c.frame;
    const CheckMode mode = resolve_mode(opts, c.atoms.size());
    Report r = start("natclo", c, mode, opts);
    r.cases = Elements(c.atoms, f.size(), mode, opts.seed, opts.samples).for_each([&](const Subset& x) {
        const Subset dx = diamond(f, x);
        const Subset gx = box(f, dx);
        if (diamond(f, gx) != dx) {
            r.fail({{{"X", x}, {"gamma(X)", gx}}, {}, "dia gamma(x) != dia x"});
            return false;
        }
        if (gx == x) {
            const Subset ndx = ~dx;
            if (~x != diamond(f, ndx)) {
                r.fail({{{"X", x}}, {}, "gamma-closed x with ~x != dia~dia x"});
                return false;
            }
            if (diamond(f, ~x) != dia_n(f, ndx, 2)) {
                r.fail({{{"X", x}}, {}, "gamma-closed x with dia~x != dia^2~dia x"});
                return false;
            }
        }
        return true;
    });
    return r;
}

Report check_nicegen(const Context& c, const VerifyOptions& opts)
{
    const Frame& f = c.frame;
    const CheckMode mode = resolve_mode(opts, c.atoms.size());
    Report r = start("nicegen", c, mode, opts);
    auto index = simplicity_index(f);
    if (!index) {
        r.note = "premise fails: some nonempty x never reaches 1 under dia";
        return r;
    }
    r.details.emplace_back("simplicity_index", std::to_string(*index));
    std::uint64_t premises = 0;
    r.cases = Elements(c.atoms, f.size(), mode, opts.seed, opts.samples).for_each([&](const Subset& x) {
        if (x.empty())
            return true;
        Subset cur = diamond(f, x);
        if (cur.is_full())
            return true;
        ++premises;
        // cur = dia^m x with m least such that dia^(m+1) x = 1.
        Subset prev = x;
        while (true) {
            Subset next = diamond(f, cur);
            if (next.is_full())
                break;
            prev = cur;
            cur = next;
        }
        const Subset y = gamma(f, prev);
        const Subset dy = diamond(f, y);
        if (gamma(f, y) != y || dy.is_full() || !diamond(f, dy).is_full()) {
            r.fail({{{"X", x}, {"Y", y}}, {}, "constructed y is not a gamma-closed element with dia y != 1 = dia^2 y"});
            return false;
        }
        return true;
    });
    r.details.emplace_back("premise_cases", std::to_string(premises));
    return r;
}

Report check_singletons(const Context& c, const VerifyOptions& opts)
{
    require_family(c, "singletons");
    Report r = start("singletons", c, CheckMode::exhaustive, opts);
    const auto& fam = *c.family;
    const int p = fam.spec.p;
    const Environment env{{"x", fam.named("D")}};
    int safe = p - 4;
    r.details.emplace_back("safe_index", std::to_string(safe));
    for (const auto& e : singleton_term_schedule(fam.spec.effective(), std::max(1, p))) {
        if (e.index > safe)
            continue;
        ++r.cases;
        const Subset got = eval_term(c.frame, e.term, env);
        const Subset want = fam.named(e.target);
        if (got != want) {
            r.fail({{{"got", got}, {"expected", want}}, {}, "schedule entry " + e.name + " misses " + e.target});
            return r;
        }
    }
    if (r.cases == 0)
        r.note = "no schedule entry is within the safe index for this p";
    return r;
}

Report check_embed(const Context& c, const VerifyOptions& opts)
{
    require_family(c, "embed");
    Report r = start("embed", c, CheckMode::exhaustive, opts);
    const Subset x = c.family->named("BDL");
    std::vector<std::size_t> labels(c.frame.size());
    for (std::size_t v = 0; v < labels.size(); ++v)
        labels[v] = x.test(v) ? 0 : 1;
    const Partition part = Partition::from_labels(labels);
    r.cases = 1;
    const bool in_algebra = std::all_of(c.atoms.begin(), c.atoms.end(),
                                        [&](const Subset& a) { return a.subset_of(x) || !a.intersects(x); });
    if (!in_algebra) {
        r.fail({{{"X", x}}, part.labels(), "B u D u L is not in the generated subalgebra"});
    } else if (!is_stable_partition(c.frame, part)) {
        r.fail({{{"X", x}}, part.labels(), "{X, ~X} is not stable"});
    } else if (!are_isomorphic(quotient(c.frame, part), complete_frame(2))) {
        r.fail({{{"X", x}}, part.labels(), "quotient is not K2"});
    }
    return r;
}

Report check_simple(const Context& c, const VerifyOptions& opts)
{
    const Frame& f = c.frame;
    const CheckMode mode = resolve_mode(opts, c.atoms.size());
    Report r = start("simple", c, mode, opts);
    auto index = simplicity_index(f);
    r.details.emplace_back("simplicity_index", index ? std::to_string(*index) : "none");
    r.cases = Elements(c.atoms, f.size(), mode, opts.seed, opts.samples).for_each([&](const Subset& x) {
        if (!x.empty() && !dia_n(f, x, 5).is_full()) {
            r.fail({{{"X", x}, {"dia^5 X", dia_n(f, x, 5)}}, {}, "x != 0 but dia^5 x != 1"});
            return false;
        }
        return true;
    });
    return r;
}

Report check_clo(const Context& c, const VerifyOptions& opts)
{
    require_family(c, "clo");
    const Frame& f = c.frame;
    const CheckMode mode = resolve_mode(opts, c.atoms.size());
    Report r = start("clo", c, mode, opts);
    std::uint64_t premises = 0;
    r.cases = Elements(c.atoms, f.size(), mode, opts.seed, opts.samples).for_each([&](const Subset& x) {
        const Subset dx = diamond(f, x);
        if (dx.is_full() || !diamond(f, dx).is_full() || box(f, dx) != x)
            return true;
        ++premises;
        if (diamond(f, ~x).is_full()) {
            r.fail({{{"X", x}}, {}, "gamma-closed x with dia x != 1 = dia^2 x has dia~x = 1"});
            return false;
        }
        return true;
    });
    r.details.emplace_back("premise_cases", std::to_string(premises));
    return r;
}

Report check_ddd(const Context& c, const VerifyOptions& opts)
{
    require_family(c, "ddd");
    const Frame& f = c.frame;
    const CheckMode mode = resolve_mode(opts, c.atoms.size());
    Report r = start("ddd", c, mode, opts);
    const Subset d = c.family->named("D");
    std::uint64_t premises = 0;
    r.cases = Elements(c.atoms, f.size(), mode, opts.seed, opts.samples).for_each([&](const Subset& x) {
        if (x.empty())
            return true;
        const Subset d4 = dia_n(f, x, 4);
        if (d4.is_full())
            return true;
        ++premises;
        if (x != d && d4 != ~d) {
            r.fail({{{"X", x}, {"dia^4 X", d4}}, {}, "x != D and dia^4 x != ~D"});
            return false;
        }
        return true;
    });
    r.details.emplace_back("premise_cases", std::to_string(premises));
    return r;
}

Report check_subD(const Context& c, const VerifyOptions& opts)
{
    require_family(c, "subD");
    const Frame& f = c.frame;
    const CheckMode mode = resolve_mode(opts, c.atoms.size());
    Report r = start("subD", c, mode, opts);
    const Subset d = c.family->named("D");
    const Subset p = c.family->named("P");
    std::uint64_t part1 = 0, part2 = 0, part3 = 0;
    // D is one of ~dia^2 y, ~dia^3 y, ~dia^4 y.
    auto yields_d = [&](const Subset& y) {
        Subset cur = dia_n(f, y, 2);
        for (int k = 2; k <= 4; ++k) {
            if (~cur == d)
                return true;
            cur = diamond(f, cur);
        }
        return false;
    };
    r.cases = Elements(c.atoms, f.size(), mode, opts.seed, opts.samples).for_each([&](const Subset& x) {
        if (x.empty())
            return true;
        if (!p.intersects(x)) {
            ++part1;
            if (!yields_d(x)) {
                r.fail({{{"X", x}}, {}, "(i) P-free x without D among ~dia^k x, k = 2..4"});
                return false;
            }
        }
        const Subset dx = diamond(f, x);
        if (p.subset_of(dx) && !dx.is_full()) {
            ++part2;
            if (!yields_d(~dx)) {
                r.fail({{{"X", x}, {"Y", ~dx}}, {}, "(ii) y = ~dia x without D among ~dia^k y, k = 2..4"});
                return false;
            }
        }
        const Subset dnx = diamond(f, ~x);
        if (!dx.is_full() && diamond(f, dx).is_full() && box(f, dx) == x && p.subset_of(dnx)) {
            ++part3;
            if (dnx.is_full()) {
                r.fail({{{"X", x}}, {}, "(iii) dia~x = 1 for a gamma-closed x with dia x != 1 = dia^2 x"});
                return false;
            }
            if (!yields_d(~dnx)) {
                r.fail({{{"X", x}, {"Y", ~dnx}}, {}, "(iii) y = ~dia~x without D among ~dia^k y, k = 2..4"});
                return false;
            }
        }
        return true;
    });
    r.details.emplace_back("part_i_cases", std::to_string(part1));
    r.details.emplace_back("part_ii_cases", std::to_string(part2));
    r.details.emplace_back("part_iii_cases", std::to_string(part3));
    return r;
}

// Looks for three disjoint sets each meeting every closed neighbourhood. Such sets exist
// iff some stable partition with >= 3 blocks has a complete quotient (merge the surplus
// blocks into one).
Report check_small_analog(const Context& c, const VerifyOptions& opts)
{
    const Frame& f = c.frame;
    Report r = start("small_analog", c, CheckMode::exhaustive, opts);
    const std::size_t n = f.size();
    if (n < 3) {
        r.note = "fewer than three vertices";
        return r;
    }
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v)
        order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](auto x, auto y) { return f.degree(x) < f.degree(y); });
    std::vector<int> color(n, -1);
    std::vector<unsigned> present(n, 0);
    std::vector<std::vector<int>> count(n, std::vector<int>(3, 0));
    std::vector<std::size_t> open(n);
    for (std::size_t v = 0; v < n; ++v)
        open[v] = f.degree(v) + 1;
    bool found = false;
    std::uint64_t nodes = 0;

    auto viable = [&](std::size_t v) {
        bool ok = true;
        f.closed_neighborhood(v).for_each([&](std::size_t w) {
            if (static_cast<std::size_t>(3 - std::popcount(present[w])) > open[w])
                ok = false;
        });
        return ok;
    };
    auto assign = [&](std::size_t v, int col, int delta) {
        f.closed_neighborhood(v).for_each([&](std::size_t w) {
            open[w] -= static_cast<std::size_t>(delta);
            count[w][static_cast<std::size_t>(col)] += delta;
            if (count[w][static_cast<std::size_t>(col)] > 0)
                present[w] |= 1u << col;
            else
                present[w] &= ~(1u << col);
        });
        color[v] = delta > 0 ? col : -1;
    };
    std::function<void(std::size_t, int)> search = [&](std::size_t depth, int used) {
        ++nodes;
        if (found)
            return;
        if (depth == n) {
            found = true;
            return;
        }
        const std::size_t v = order[depth];
        for (int col = 0; col < std::min(used + 1, 3) && !found; ++col) {
            assign(v, col, 1);
            if (viable(v))
                search(depth + 1, std::max(used, col + 1));
            if (!found)
                assign(v, col, -1);
        }
    };
    bool trivially_impossible = false;
    for (std::size_t v = 0; v < n; ++v)
        if (f.degree(v) + 1 < 3)
            trivially_impossible = true;
    if (trivially_impossible)
        r.note = "some closed neighbourhood has fewer than three vertices";
    else
        search(0, 0);
    r.cases = nodes;
    if (found) {
        std::vector<std::size_t> labels(n);
        for (std::size_t v = 0; v < n; ++v)
            labels[v] = static_cast<std::size_t>(color[v]);
        const Partition part = Partition::from_labels(labels);
        r.fail({{}, part.labels(), "stable partition into three blocks with quotient K3"});
    }
    return r;
}

Report check_diff(const Context& c, const VerifyOptions& opts)
{
    require_family(c, "diff");
    if (!opts.against)
        throw Error(Errc::invalid_argument, "lemma 'diff' needs a second family (against)");
    Report r = start("diff", c, CheckMode::exhaustive, opts);
    const auto& m = c.family->spec.members;
    const auto& n = *opts.against;
    const int p = c.family->spec.p;
    const auto dt = distinguishing_term(m, n);
    const int i = dt.index;
    if (p < i + 4)
        throw Error(Errc::invalid_argument, "diff at index " + std::to_string(i) + " needs p >= " +
                                                std::to_string(i + 4));
    const FamilyFrame first = *c.family;
    const FamilyFrame second = build_truncation(FamilySpec{n, p});
    const std::string ui = "U" + std::to_string(i);
    const std::string both = ui + "+U" + std::to_string(i + 1);
    const Subset v1 = eval_term(first.frame, dt.term, {{"x", first.named("D")}});
    const Subset v2 = eval_term(second.frame, dt.term, {{"x", second.named("D")}});
    const Subset w1 = first.named(dt.first_contains_index ? both : ui);
    const Subset w2 = second.named(dt.first_contains_index ? ui : both);
    r.cases = 2;
    r.details.emplace_back("i", std::to_string(i));
    r.details.emplace_back("against", FamilySpec{n, p}.to_string());
    r.details.emplace_back("term_nodes", std::to_string(dt.term.dag_size()));
    r.details.emplace_back("first_value", format_subset(first.frame, v1));
    r.details.emplace_back("second_value", format_subset(second.frame, v2));
    if (v1 != w1)
        r.fail({{{"first_value", v1}, {"first_expected", w1}}, {}, "first side differs from expectation"});
    else if (v2 != w2)
        r.fail({{{"second_value", v2}, {"second_expected", w2}}, {}, "second side differs from expectation"});
    return r;
}

Report check_big_analog(const Context& c, const VerifyOptions& opts)
{
    require_family(c, "big_analog");
    Report r = start("big_analog", c, CheckMode::exhaustive, opts);
    r.note = "finite analog, exploratory: recorded, not asserted";
    std::uint64_t visited = 0;
    CoverVerdict v;
    if (c.frame.size() <= 2 || !is_connected(c.frame)) {
        v = cover_check(c.frame);
    } else {
        enumerate_stable_partitions(c.frame, 3, c.frame.size() - 1, [&](const Partition& p) {
            ++visited;
            v.witness = p;
            return false;
        });
        v.status = v.witness ? CoverStatus::fail : CoverStatus::pass;
    }
    r.cases = visited;
    r.details.emplace_back("cover", to_string(v.status));
    if (v.status == CoverStatus::fail)
        r.fail({{}, v.witness->labels(), "stable partition with 3..n-1 blocks"});
    return r;
}

using Checker = Report (*)(const Context&, const VerifyOptions&);

Checker checker_for(const std::string& id)
{
    if (id == "axioms") return check_axioms;
    if (id == "natclo") return check_natclo;
    if (id == "nicegen") return check_nicegen;
    if (id == "singletons") return check_singletons;
    if (id == "embed") return check_embed;
    if (id == "simple") return check_simple;
    if (id == "clo") return check_clo;
    if (id == "ddd") return check_ddd;
    if (id == "subD") return check_subD;
    if (id == "small_analog") return check_small_analog;
    if (id == "diff") return check_diff;
    if (id == "big_analog") return check_big_analog;
    throw Error(Errc::invalid_argument, "unknown lemma '" + id + "'");
}

Report timed(Checker check, const Context& c, const VerifyOptions& opts)
{
    const auto t0 = std::chrono::steady_clock::now();
    Report r = check(c, opts);
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace

Report verify_lemma(const std::string& id, const VerifyTarget& target, const VerifyOptions& opts)
{
    Checker check = checker_for(id);
    if (std::holds_alternative<Frame>(target)) {
        auto it = std::find_if(list_lemmas().begin(), list_lemmas().end(), [&](auto& l) { return l.id == id; });
        if (it->applicability == Applicability::family_only)
            throw Error(Errc::not_applicable, "lemma '" + id + "' applies only to family truncations");
    }
    return timed(check, make_context(target), opts);
}

std::vector<Report> verify_all(const VerifyTarget& target, const VerifyOptions& opts, unsigned jobs)
{
    const bool family = std::holds_alternative<FamilySpec>(target);
    std::vector<std::string> ids;
    for (const auto& l : list_lemmas()) {
        if (l.applicability == Applicability::family_only && !family)
            continue;
        if (l.id == "diff" && !opts.against)
            continue;
        if (l.id == "big_analog" && (!family || truncation_size(std::get<FamilySpec>(target).p) > kPartitionTier))
            continue;
        ids.push_back(l.id);
    }
    const Context ctx = make_context(target);
    std::vector<Report> out(ids.size());
    jobs = std::max(1u, jobs);
    for (std::size_t base = 0; base < ids.size(); base += jobs) {
        std::vector<std::future<Report>> batch;
        for (std::size_t i = base; i < std::min(ids.size(), base + jobs); ++i)
            batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async,
                                       [&, i] { return timed(checker_for(ids[i]), ctx, opts); }));
        for (std::size_t k = 0; k < batch.size(); ++k)
            out[base + k] = batch[k].get();
    }
    return out;
}

} // namespace ktb
