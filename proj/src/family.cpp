#include "ktb/family.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace ktb {

namespace {

int parse_int(const std::string& s, const std::string& context)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw Error(Errc::parse_error, "expected an integer in " + context + ", got '" + s + "'");
    return v;
}

std::string strip(const std::string& s)
{
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t')
            out += c;
    return out;
}

void validate(const FamilySpec& spec)
{
    if (spec.p < 2)
        throw Error(Errc::invalid_argument, "truncation length p must be at least 2");
    if (truncation_size(spec.p) > Subset::kMaxWidth)
        throw Error(Errc::tier_exceeded, "truncation length p=" + std::to_string(spec.p) + " exceeds 128 vertices");
    for (int i : spec.members)
        if (i <= 0 || i % 2 != 0)
            throw Error(Errc::invalid_argument, "N may only contain positive even numbers, got " + std::to_string(i));
}

} // namespace

FamilySpec FamilySpec::parse(const std::string& text)
{
    FamilySpec spec;
    bool have_n = false, have_p = false;
    std::string t = strip(text);
    std::size_t pos = 0;
    while (pos < t.size()) {
        auto semi = t.find(';', pos);
        auto part = t.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        pos = semi == std::string::npos ? t.size() : semi + 1;
        if (part.empty())
            continue;
        auto eq = part.find('=');
        if (eq == std::string::npos)
            throw Error(Errc::parse_error, "family spec item '" + part + "' lacks '='");
        auto key = part.substr(0, eq);
        auto value = part.substr(eq + 1);
        if (key == "N") {
            have_n = true;
            if (value == "{}" || value.empty())
                continue;
            if (value.front() == '{' && value.back() == '}')
                value = value.substr(1, value.size() - 2);
            std::size_t q = 0;
            while (q <= value.size()) {
                auto comma = value.find(',', q);
                spec.members.insert(parse_int(value.substr(q, comma == std::string::npos ? std::string::npos
                                                                                           : comma - q),
                                              "N"));
                if (comma == std::string::npos)
                    break;
                q = comma + 1;
            }
        } else if (key == "p") {
            have_p = true;
            spec.p = parse_int(value, "p");
        } else {
            throw Error(Errc::parse_error, "unknown family spec key '" + key + "'");
        }
    }
    if (!have_n || !have_p)
        throw Error(Errc::parse_error, "family spec needs both N and p, e.g. \"N=2,4;p=6\"");
    validate(spec);
    return spec;
}

std::string FamilySpec::to_string() const
{
    std::string out = "N=";
    bool first = true;
    for (int i : members) {
        if (!first)
            out += ',';
        first = false;
        out += std::to_string(i);
    }
    return out + ";p=" + std::to_string(p);
}

std::set<int> FamilySpec::effective() const
{
    std::set<int> out;
    for (int i : members)
        if (i <= p - 2)
            out.insert(i);
    return out;
}

std::vector<std::string> FamilySpec::warnings() const
{
    std::vector<std::string> out;
    for (int i : members)
        if (i > p - 2)
            out.push_back("member " + std::to_string(i) + " of N exceeds p-2=" + std::to_string(p - 2) +
                          " and is ignored at this truncation");
    return out;
}

FamilyFrame build_truncation(const FamilySpec& spec)
{
    validate(spec);
    const int p = spec.p;
    const auto eff = spec.effective();
    using namespace vertex;
    std::vector<Edge> e;
    for (auto b : {b1, b2, b3})
        e.emplace_back(a, b);
    e.emplace_back(b1, c1);
    e.emplace_back(b2, c2);
    e.emplace_back(c1, d);
    e.emplace_back(ell(0), ell(1));
    for (int i = 0; i <= p; ++i)
        e.emplace_back(a, ell(i));
    auto has_u = [&](int j) { return j >= 1 && j <= p - 1; };
    auto has_l = [&](int i) { return i >= 0 && i <= p; };
    for (int i = 1; i <= p; ++i) {
        if (has_u(i))
            e.emplace_back(ell(i), u(p, i));
        if (i % 2 == 0) {
            if (has_u(i - 1))
                e.emplace_back(ell(i), u(p, i - 1));
            if (eff.count(i) && has_u(i + 1))
                e.emplace_back(ell(i), u(p, i + 1));
            if (!eff.count(i) && has_l(i + 1) && has_u(i))
                e.emplace_back(ell(i + 1), u(p, i));
        }
    }
    std::vector<std::string> labels = {"d", "c1", "b1", "a", "b2", "c2", "b3"};
    for (int i = 0; i <= p; ++i)
        labels.push_back("l" + std::to_string(i));
    for (int j = 1; j <= p - 1; ++j)
        labels.push_back("u" + std::to_string(j));
    return {spec, Frame::from_edges(truncation_size(p), e, std::move(labels))};
}

Subset FamilyFrame::named(const std::string& name) const
{
    if (auto plus = name.find('+'); plus != std::string::npos)
        return named(name.substr(0, plus)) | named(name.substr(plus + 1));
    const int p = spec.p;
    using namespace vertex;
    const std::size_t n = frame.size();
    Subset s(n);
    auto all_l = [&] {
        for (int i = 0; i <= p; ++i)
            s.set(ell(i));
    };
    auto all_u = [&] {
        for (int j = 1; j <= p - 1; ++j)
            s.set(u(p, j));
    };
    if (name == "A") s.set(a);
    else if (name == "B") { s.set(b1); s.set(b2); s.set(b3); }
    else if (name == "B1") s.set(b1);
    else if (name == "B2") s.set(b2);
    else if (name == "B3") s.set(b3);
    else if (name == "C") { s.set(c1); s.set(c2); }
    else if (name == "C1") s.set(c1);
    else if (name == "C2") s.set(c2);
    else if (name == "D") s.set(d);
    else if (name == "P") { s.set(b1); s.set(c1); s.set(d); }
    else if (name == "L") all_l();
    else if (name == "U") all_u();
    else if (name == "W") s = frame.full_set();
    else if (name == "BDL") { s.set(b1); s.set(b2); s.set(b3); s.set(d); all_l(); }
    else if (name == "C2U") { s.set(c2); all_u(); }
    else if (name == "B2L") { s.set(b2); all_l(); }
    else if (name.size() >= 2 && (name[0] == 'L' || name[0] == 'U')) {
        int i = 0;
        auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), i);
        if (ec != std::errc() || ptr != name.data() + name.size())
            throw Error(Errc::invalid_argument, "unknown named subset '" + name + "'");
        if (name[0] == 'L') {
            if (i < 0 || i > p)
                throw Error(Errc::out_of_range, name + " lies outside the truncation p=" + std::to_string(p));
            s.set(ell(i));
        } else {
            if (i < 1 || i > p - 1)
                throw Error(Errc::out_of_range, name + " lies outside the truncation p=" + std::to_string(p));
            s.set(u(p, i));
        }
    } else {
        throw Error(Errc::invalid_argument, "unknown named subset '" + name + "'");
    }
    return s;
}

Subset named_subset(const FamilyFrame& f, const std::string& name) { return f.named(name); }

std::vector<ScheduleEntry> singleton_term_schedule(const std::set<int>& n_set, int max_index)
{
    if (max_index < 1)
        throw Error(Errc::invalid_argument, "schedule max_index must be at least 1");
    std::vector<ScheduleEntry> out;
    std::map<std::string, Term> by_name;
    auto add = [&](const std::string& name, Term t, std::string target, int index) {
        by_name.insert_or_assign(name, t);
        out.push_back({name, std::move(t), std::move(target), index});
    };
    auto T = [&](const std::string& name) { return by_name.at(name); };
    auto L = [](int i) { return "L" + std::to_string(i); };
    auto U = [](int i) { return "U" + std::to_string(i); };

    const Term x = Term::var("x");
    add("D", x, "D", 0);
    add("C1", dia(x) && !x, "C1", 0);
    add("B1", dia(T("C1")) && !dia(x), "B1", 0);
    add("C2U", !dia_n(x, 4), "C2U", 0);
    add("A", dia(T("B1")) && !dia(T("C1")), "A", 0);
    add("B3", !(dia_n(T("C2U"), 2) || dia_n(x, 2)), "B3", 0);
    add("L0", !(T("B3") || dia(T("C2U")) || dia_n(x, 3)), "L0", 0);
    add("B2L", (dia(T("C2U")) || T("L0")) && !T("C2U"), "B2L", 0);
    add("L1", dia(T("L0")) && !(T("A") || T("L0")), "L1", 1);
    add("U1", dia(T("L1")) && !dia(T("A")), "U1", 1);

    for (int i = 1; i + 1 <= max_index; i += 2) {
        const Term da = dia(T("A"));
        // u_i also sees l_(i-1) when i-1 is in N, so that column is removed explicitly.
        const Term next_l = dia(T(U(i))) && !(dia(T(L(i))) || T(L(i - 1)));
        if (!n_set.count(i + 1)) {
            add(L(i + 1), next_l, L(i + 1), i + 1);
            add(U(i + 1), dia(T(L(i + 1))) && !(da || T(U(i))), U(i + 1), i + 1);
            add(L(i + 2), dia(T(U(i + 1))) && !dia(T(L(i + 1))), L(i + 2), i + 2);
            add(U(i + 2), dia(T(L(i + 2))) && !(da || T(U(i + 1))), U(i + 2), i + 2);
        } else {
            const std::string uu = U(i + 1) + "+" + U(i + 2);
            const std::string ll = L(i + 2) + "+" + L(i + 3);
            const std::string xname = "X" + std::to_string(i);
            add(L(i + 1), next_l, L(i + 1), i + 1);
            add(uu, dia(T(L(i + 1))) && !(da || T(U(i))), uu, i + 2);
            add(ll, dia(T(uu)) && !dia(T(L(i + 1))), ll, i + 3);
            add(U(i + 2), T(uu) && dia(T(ll)), U(i + 2), i + 2);
            add(U(i + 1), T(uu) && !T(U(i + 2)), U(i + 1), i + 2);
            std::string x_target = U(i + 3) + (n_set.count(i + 3) ? "+" + U(i + 4) : "");
            add(xname, dia(T(ll)) && !(da || T(U(i + 2))), x_target, i + 3);
            add(L(i + 2), T(ll) && !dia(T(xname)), L(i + 2), i + 2);
        }
    }
    return out;
}

const ScheduleEntry& schedule_entry(const std::vector<ScheduleEntry>& schedule, const std::string& name)
{
    for (const auto& e : schedule)
        if (e.name == name)
            return e;
    throw Error(Errc::invalid_argument, "schedule has no entry '" + name + "'");
}

DistinguishingTerm distinguishing_term(const std::set<int>& m, const std::set<int>& n)
{
    std::set<int> diff;
    std::set_symmetric_difference(m.begin(), m.end(), n.begin(), n.end(), std::inserter(diff, diff.end()));
    if (diff.empty())
        throw Error(Errc::invalid_argument, "distinguishing_term needs M != N");
    const int i = *diff.begin();
    if (i <= 0 || i % 2 != 0)
        throw Error(Errc::invalid_argument, "N may only contain positive even numbers");
    const bool first_contains = m.count(i) > 0;
    const auto& side = first_contains ? n : m;
    auto schedule = singleton_term_schedule(side, i);
    const Term ta = schedule_entry(schedule, "A").term;
    const Term tl = schedule_entry(schedule, "L" + std::to_string(i)).term;
    const Term tu = schedule_entry(schedule, "U" + std::to_string(i - 1)).term;
    return DistinguishingTerm{i, dia(tl) && !(ta || tl || tu), first_contains};
}

FamilyFrame preset(const std::string& name)
{
    if (name == "g1")
        return build_truncation(FamilySpec{{}, 2});
    if (name == "g2")
        return build_truncation(FamilySpec{{}, 3});
    throw Error(Errc::invalid_argument, "unknown preset '" + name + "' (expected g1 or g2)");
}

} // namespace ktb
