#include "ktb/algebra.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <unordered_map>

namespace ktb {

namespace {

void check_width(const Frame& f, const Subset& x)
{
    if (x.width() != f.size())
        throw Error(Errc::width_mismatch, "subset of width " + std::to_string(x.width()) +
                                              " used with a frame of " + std::to_string(f.size()) + " vertices");
}

} // namespace

Subset diamond(const Frame& f, const Subset& x)
{
    check_width(f, x);
    Subset out = x;
    x.for_each([&](std::size_t v) { out |= f.neighbors(v); });
    return out;
}

Subset box(const Frame& f, const Subset& x) { return ~diamond(f, ~x); }

Subset dia_n(const Frame& f, const Subset& x, std::size_t k)
{
    check_width(f, x);
    Subset out = x;
    for (std::size_t i = 0; i < k; ++i) {
        Subset next = diamond(f, out);
        if (next == out)
            break;
        out = next;
    }
    return out;
}

Subset gamma(const Frame& f, const Subset& x) { return box(f, diamond(f, x)); }

Subset eval_term(const Frame& f, const Term& t, const Environment& env)
{
    std::unordered_map<const void*, Subset> memo;
    auto rec = [&](auto& self, const Term& u) -> Subset {
        if (auto it = memo.find(u.id()); it != memo.end())
            return it->second;
        Subset r(f.size());
        switch (u.kind()) {
        case Term::Kind::Zero: break;
        case Term::Kind::One: r = f.full_set(); break;
        case Term::Kind::Var: {
            auto it = env.find(u.name());
            if (it == env.end())
                throw Error(Errc::invalid_argument, "unbound variable '" + u.name() + "'");
            check_width(f, it->second);
            r = it->second;
            break;
        }
        case Term::Kind::Not: r = ~self(self, u.arg(0)); break;
        case Term::Kind::And: r = self(self, u.arg(0)) & self(self, u.arg(1)); break;
        case Term::Kind::Or: r = self(self, u.arg(0)) | self(self, u.arg(1)); break;
        case Term::Kind::Dia: r = diamond(f, self(self, u.arg(0))); break;
        case Term::Kind::Box: r = box(f, self(self, u.arg(0))); break;
        }
        memo.emplace(u.id(), r);
        return r;
    };
    return rec(rec, t);
}

std::uint64_t AlgebraSet::size() const noexcept
{
    if (atoms_.size() >= 64)
        return UINT64_MAX;
    return std::uint64_t{1} << atoms_.size();
}

bool AlgebraSet::contains(const Subset& x) const
{
    if (x.width() != width_)
        return false;
    for (const auto& a : atoms_)
        if (a.intersects(x) && !a.subset_of(x))
            return false;
    return true;
}

Subset AlgebraSet::element(std::uint64_t mask) const
{
    if (atoms_.size() > 64)
        throw Error(Errc::tier_exceeded, "element masks need at most 64 atoms");
    Subset out(width_);
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        if ((mask >> i) & 1u)
            out |= atoms_[i];
    return out;
}

Term AlgebraSet::witness(const Subset& x) const
{
    if (!contains(x))
        throw Error(Errc::invalid_argument, "set is not an element of the algebra");
    std::optional<Term> t;
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (!atoms_[i].subset_of(x))
            continue;
        if (i < 64)
            mask |= std::uint64_t{1} << i;
        t = t ? (*t || atom_terms_[i]) : atom_terms_[i];
    }
    if (!elements_.empty() && atoms_.size() < 64)
        return witnesses_[mask];
    return t ? *t : Term::zero();
}

AlgebraSet closure(const Frame& f, std::span<const Subset> generators, const std::vector<std::string>& names,
                   ClosureOptions opts)
{
    for (const auto& g : generators)
        check_width(f, g);
    if (!names.empty() && names.size() != generators.size())
        throw Error(Errc::invalid_argument, "generator name count differs from generator count");

    std::vector<Term> gen_terms;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        std::string name = !names.empty()            ? names[i]
                           : generators.size() == 1 ? std::string("x")
                                                    : "x" + std::to_string(i);
        gen_terms.push_back(Term::var(name));
    }

    AlgebraSet a;
    a.width_ = f.size();
    if (f.size() > 0) {
        a.atoms_.push_back(f.full_set());
        a.atom_terms_.push_back(Term::one());
    }

    // Split every atom by `s`; returns whether anything changed.
    auto split_by = [&](const Subset& s, const Term& st) {
        bool changed = false;
        std::vector<Subset> atoms;
        std::vector<Term> terms;
        for (std::size_t i = 0; i < a.atoms_.size(); ++i) {
            Subset in = a.atoms_[i] & s;
            Subset out = a.atoms_[i].minus(s);
            if (in.empty() || out.empty()) {
                atoms.push_back(a.atoms_[i]);
                terms.push_back(a.atom_terms_[i]);
                continue;
            }
            changed = true;
            atoms.push_back(in);
            terms.push_back(a.atom_terms_[i] && st);
            atoms.push_back(out);
            terms.push_back(a.atom_terms_[i] && !st);
        }
        a.atoms_ = std::move(atoms);
        a.atom_terms_ = std::move(terms);
        return changed;
    };

    for (std::size_t i = 0; i < generators.size(); ++i)
        split_by(generators[i], gen_terms[i]);
    // Fixpoint: the atoms are final once the diamond of every atom is a union of atoms.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < a.atoms_.size(); ++i) {
            Subset d = diamond(f, a.atoms_[i]);
            Term dt = dia(a.atom_terms_[i]);
            if (split_by(d, dt)) {
                changed = true;
                break;
            }
        }
    }

    // Deterministic atom order: by lowest member.
    std::vector<std::size_t> idx(a.atoms_.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](auto x, auto y) { return a.atoms_[x].first() < a.atoms_[y].first(); });
    std::vector<Subset> atoms;
    std::vector<Term> terms;
    for (auto i : idx) {
        atoms.push_back(a.atoms_[i]);
        terms.push_back(a.atom_terms_[i]);
    }
    a.atoms_ = std::move(atoms);
    a.atom_terms_ = std::move(terms);

    if (opts.materialize) {
        if (a.atoms_.size() >= 64 || (std::uint64_t{1} << a.atoms_.size()) > opts.budget)
            throw Error(Errc::budget_exceeded, "generated algebra has 2^" + std::to_string(a.atoms_.size()) +
                                                   " elements, over the budget of " + std::to_string(opts.budget));
        const std::uint64_t count = std::uint64_t{1} << a.atoms_.size();
        a.elements_.reserve(count);
        a.witnesses_.reserve(count);
        a.elements_.push_back(Subset(f.size()));
        a.witnesses_.push_back(Term::zero());
        for (std::uint64_t m = 1; m < count; ++m) {
            const auto low = static_cast<std::size_t>(std::countr_zero(m));
            const std::uint64_t rest = m & (m - 1);
            a.elements_.push_back(a.elements_[rest] | a.atoms_[low]);
            a.witnesses_.push_back(rest == 0 ? a.atom_terms_[low] : (a.witnesses_[rest] || a.atom_terms_[low]));
        }
    }
    return a;
}

std::optional<std::size_t> simplicity_index(const Frame& f)
{
    // diamond^k of a nonempty X contains diamond^k of any singleton inside X, so the
    // worst case is a singleton and the index is the largest eccentricity.
    return diameter(f);
}

Report check_self_conjugacy(const Frame& f, CheckMode mode, std::uint64_t seed, std::uint64_t samples)
{
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.lemma = "self_conjugacy";
    r.frame = "n=" + std::to_string(f.size());
    r.mode = mode;
    r.seed = seed;
    const std::size_t n = f.size();

    auto violated = [&](const Subset& x, const Subset& y) {
        return x.intersects(diamond(f, y)) != diamond(f, x).intersects(y);
    };
    auto record = [&](const Subset& x, const Subset& y) {
        r.fail({{{"X", x}, {"Y", y}}, {}, "X & dia(Y) = 0 and dia(X) & Y = 0 disagree"});
    };

    if (mode == CheckMode::exhaustive) {
        if (n > kExhaustivePairTier)
            throw Error(Errc::invalid_argument, "exhaustive self-conjugacy needs n <= " +
                                                    std::to_string(kExhaustivePairTier));
        const std::uint64_t count = std::uint64_t{1} << n;
        std::vector<std::uint64_t> dia_of(count);
        for (std::uint64_t x = 0; x < count; ++x)
            dia_of[x] = diamond(f, Subset::from_words(n, x)).words()[0];
        for (std::uint64_t x = 0; x < count && r.passed; ++x) {
            for (std::uint64_t y = 0; y < count; ++y) {
                ++r.cases;
                if (((x & dia_of[y]) == 0) != ((dia_of[x] & y) == 0)) {
                    record(Subset::from_words(n, x), Subset::from_words(n, y));
                    break;
                }
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t i = 0; i < samples; ++i) {
            Subset x = Subset::from_words(n, rng(), rng());
            Subset y = Subset::from_words(n, rng(), rng());
            ++r.cases;
            if (violated(x, y)) {
                record(x, y);
                break;
            }
        }
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace ktb
