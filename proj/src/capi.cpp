#include "ktb/ktb.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <optional>

#include <json.hpp>

#include "ktb/algebra.hpp"
#include "ktb/canonical.hpp"
#include "ktb/errors.hpp"
#include "ktb/family.hpp"
#include "ktb/graph6.hpp"
#include "ktb/morphisms.hpp"
#include "ktb/search.hpp"
#include "ktb/verify.hpp"

using nlohmann::ordered_json;

struct ktb_frame {
    ktb::Frame frame;
    std::optional<ktb::FamilyFrame> family;
};

struct ktb_pipeline {
    ktb::CoverPipeline pipe;
};

namespace {

thread_local std::string last_error;

ktb_status status_of(ktb::Errc e)
{
    switch (e) {
    case ktb::Errc::invalid_argument: return KTB_ERR_INVALID_ARGUMENT;
    case ktb::Errc::parse_error: return KTB_ERR_PARSE;
    case ktb::Errc::out_of_range: return KTB_ERR_OUT_OF_RANGE;
    case ktb::Errc::width_mismatch: return KTB_ERR_WIDTH_MISMATCH;
    case ktb::Errc::tier_exceeded: return KTB_ERR_TIER_EXCEEDED;
    case ktb::Errc::not_applicable: return KTB_ERR_NOT_APPLICABLE;
    case ktb::Errc::budget_exceeded: return KTB_ERR_BUDGET_EXCEEDED;
    }
    return KTB_ERR_INTERNAL;
}

template <typename F>
ktb_status guard(F&& body)
{
    last_error.clear();
    try {
        body();
        return KTB_OK;
    } catch (const ktb::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        last_error = e.what();
        return KTB_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown exception";
        return KTB_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what)
{
    if (!p)
        throw ktb::Error(ktb::Errc::invalid_argument, std::string(what) + " must not be null");
}

char* dup(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ordered_json names_of(const ktb::Frame& f, const ktb::Subset& s)
{
    ordered_json a = ordered_json::array();
    s.for_each([&](std::size_t v) { a.push_back(f.name(v)); });
    return a;
}

std::string frame_json(const ktb_frame& h)
{
    const ktb::Frame& f = h.frame;
    ordered_json j;
    j["n"] = f.size();
    j["edge_count"] = f.edge_count();
    j["graph6"] = ktb::encode_graph6(f);
    if (h.family) {
        j["family"] = h.family->spec.to_string();
        j["warnings"] = h.family->spec.warnings();
    }
    ordered_json labels = ordered_json::array();
    for (std::size_t v = 0; v < f.size(); ++v)
        labels.push_back(f.name(v));
    j["vertices"] = labels;
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : f.edges())
        edges.push_back({f.name(u), f.name(v)});
    j["edges"] = edges;
    j["connected"] = ktb::is_connected(f);
    if (auto d = ktb::diameter(f))
        j["diameter"] = *d;
    if (f.size() <= ktb::kCanonicalTier)
        j["canonical"] = ktb::canonical_form(f);
    return j.dump();
}

std::string frame_text(const ktb::Frame& f)
{
    std::string out;
    for (std::size_t v = 0; v < f.size(); ++v) {
        out += f.name(v) + ":";
        f.neighbors(v).for_each([&](std::size_t w) { out += " " + f.name(w); });
        out += "\n";
    }
    return out;
}

ktb::Subset resolve_set(const ktb_frame& h, const std::string& text)
{
    if (h.family && text.find('{') == std::string::npos) {
        try {
            return h.family->named(text);
        } catch (const ktb::Error&) {
        }
    }
    return ktb::parse_subset(h.frame, text);
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return {};
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

ktb::Environment parse_bindings(const ktb_frame& h, const char* bindings)
{
    ktb::Environment env;
    std::string text = bindings ? bindings : "";
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto semi = text.find(';', pos);
        std::string item = trim(text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos));
        pos = semi == std::string::npos ? text.size() : semi + 1;
        if (item.empty())
            continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ktb::Error(ktb::Errc::parse_error, "binding '" + item + "' is not name=set");
        env[trim(item.substr(0, eq))] = resolve_set(h, trim(item.substr(eq + 1)));
    }
    if (h.family && !env.count("x"))
        env["x"] = h.family->named("D");
    return env;
}

ktb::VerifyOptions verify_options(const ktb_verify_options* o, int p)
{
    ktb::VerifyOptions v;
    if (!o)
        return v;
    if (o->mode == KTB_MODE_EXHAUSTIVE)
        v.mode = ktb::CheckMode::exhaustive;
    else if (o->mode == KTB_MODE_SAMPLED)
        v.mode = ktb::CheckMode::sampled;
    v.seed = o->seed;
    v.samples = o->samples;
    if (o->against) {
        std::string a = trim(o->against);
        if (a.rfind("N=", 0) == 0)
            a = a.substr(2);
        if (auto semi = a.find(';'); semi != std::string::npos)
            a = a.substr(0, semi);
        v.against = ktb::FamilySpec::parse("N=" + a + ";p=" + std::to_string(p)).members;
    }
    return v;
}

ktb_verdict verdict_of(ktb::CoverStatus s)
{
    switch (s) {
    case ktb::CoverStatus::pass: return KTB_PASS;
    case ktb::CoverStatus::fail: return KTB_FAIL;
    case ktb::CoverStatus::not_applicable: return KTB_NOT_APPLICABLE;
    }
    return KTB_NOT_APPLICABLE;
}

bool is_exploratory(const std::string& id)
{
    for (const auto& l : ktb::list_lemmas())
        if (l.id == id)
            return l.exploratory;
    return false;
}

void run_verify(const ktb::VerifyTarget& target, const ktb::Frame& names, const char* lemma,
                const ktb_verify_options* o, int p, ktb_verdict* verdict, char** json)
{
    require(json, "json");
    const ktb::VerifyOptions opts = verify_options(o, p);
    const ktb::JsonOptions jo{o && o->include_timing};
    const std::string id = lemma ? lemma : "all";
    if (id != "all") {
        const ktb::Report r = ktb::verify_lemma(id, target, opts);
        if (verdict)
            *verdict = r.passed ? KTB_PASS : KTB_FAIL;
        *json = dup(ktb::report_to_json(r, names, jo));
        return;
    }
    const auto reports = ktb::verify_all(target, opts, o ? o->jobs : 1);
    bool passed = true;
    ordered_json all = ordered_json::array();
    for (const auto& r : reports) {
        if (!r.passed && !is_exploratory(r.lemma))
            passed = false;
        all.push_back(ordered_json::parse(ktb::report_to_json(r, names, jo)));
    }
    ordered_json j;
    j["frame"] = reports.empty() ? std::string() : reports.front().frame;
    j["status"] = passed ? "pass" : "fail";
    j["reports"] = all;
    if (verdict)
        *verdict = passed ? KTB_PASS : KTB_FAIL;
    *json = dup(j.dump());
}

ktb::FilterOptions filter_options(const ktb_search_options* o)
{
    ktb::FilterOptions f;
    if (o) {
        f.jobs = o->jobs;
        f.include_timing = o->include_timing != 0;
    }
    return f;
}

void copy_summary(const ktb::FilterSummary& s, ktb_search_summary* out)
{
    if (out)
        *out = ktb_search_summary{s.total, s.pass, s.fail, s.na};
}

} // namespace

extern "C" {

const char* ktb_version(void) { return "1.0.0"; }

const char* ktb_last_error(void) { return last_error.c_str(); }

const char* ktb_status_name(ktb_status s)
{
    switch (s) {
    case KTB_OK: return "ok";
    case KTB_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case KTB_ERR_PARSE: return "parse_error";
    case KTB_ERR_OUT_OF_RANGE: return "out_of_range";
    case KTB_ERR_WIDTH_MISMATCH: return "width_mismatch";
    case KTB_ERR_TIER_EXCEEDED: return "tier_exceeded";
    case KTB_ERR_NOT_APPLICABLE: return "not_applicable";
    case KTB_ERR_BUDGET_EXCEEDED: return "budget_exceeded";
    case KTB_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

void ktb_string_free(char* s) { std::free(s); }

ktb_status ktb_frame_from_graph6(const char* graph6, ktb_frame** out)
{
    return guard([&] {
        require(graph6, "graph6");
        require(out, "out");
        *out = new ktb_frame{ktb::decode_graph6(graph6), std::nullopt};
    });
}

ktb_status ktb_frame_from_edges(size_t n, const size_t* pairs, size_t edge_count, ktb_frame** out)
{
    return guard([&] {
        require(out, "out");
        if (edge_count > 0)
            require(pairs, "pairs");
        std::vector<ktb::Edge> edges;
        for (size_t i = 0; i < edge_count; ++i)
            edges.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
        *out = new ktb_frame{ktb::Frame::from_edges(n, edges), std::nullopt};
    });
}

ktb_status ktb_frame_family(const char* spec, ktb_frame** out)
{
    return guard([&] {
        require(spec, "spec");
        require(out, "out");
        auto fam = ktb::build_truncation(ktb::FamilySpec::parse(spec));
        *out = new ktb_frame{fam.frame, fam};
    });
}

ktb_status ktb_frame_preset(const char* name, ktb_frame** out)
{
    return guard([&] {
        require(name, "name");
        require(out, "out");
        auto fam = ktb::preset(name);
        *out = new ktb_frame{fam.frame, fam};
    });
}

void ktb_frame_free(ktb_frame* f) { delete f; }

size_t ktb_frame_vertex_count(const ktb_frame* f) { return f ? f->frame.size() : 0; }

ktb_status ktb_frame_export(const ktb_frame* f, ktb_format format, char** out)
{
    return guard([&] {
        require(f, "frame");
        require(out, "out");
        switch (format) {
        case KTB_FORMAT_JSON: *out = dup(frame_json(*f)); return;
        case KTB_FORMAT_GRAPH6: *out = dup(ktb::encode_graph6(f->frame)); return;
        case KTB_FORMAT_DOT: *out = dup(ktb::to_dot(f->frame)); return;
        case KTB_FORMAT_TEXT: *out = dup(frame_text(f->frame)); return;
        }
        throw ktb::Error(ktb::Errc::invalid_argument, "unknown format");
    });
}

ktb_status ktb_check_cover(const ktb_frame* f, ktb_verdict* verdict, char** json)
{
    return guard([&] {
        require(f, "frame");
        const ktb::CoverVerdict v = ktb::cover_check(f->frame);
        if (verdict)
            *verdict = verdict_of(v.status);
        if (json)
            *json = dup(ktb::cover_verdict_to_json(v, f->frame));
    });
}

ktb_status ktb_quotients(const ktb_frame* f, size_t min_blocks, size_t max_blocks, char** json)
{
    return guard([&] {
        require(f, "frame");
        require(json, "json");
        const ktb::Frame& g = f->frame;
        const std::size_t lo = min_blocks == 0 ? 1 : min_blocks;
        const std::size_t hi = max_blocks == 0 ? g.size() : max_blocks;
        ordered_json parts = ordered_json::array();
        std::map<std::string, std::size_t> classes;
        std::vector<std::string> class_order;
        ktb::enumerate_stable_partitions(g, lo, hi, [&](const ktb::Partition& p) {
            const ktb::Frame q = ktb::quotient(g, p);
            const std::string form = q.size() <= ktb::kCanonicalTier ? ktb::canonical_form(q) : ktb::encode_graph6(q);
            if (classes[form]++ == 0)
                class_order.push_back(form);
            ordered_json e;
            e["partition"] = p.to_string();
            e["blocks"] = p.blocks();
            e["quotient"] = ktb::encode_graph6(q);
            e["class"] = form;
            parts.push_back(e);
            return true;
        });
        ordered_json cls = ordered_json::array();
        for (const auto& form : class_order)
            cls.push_back({{"class", form}, {"count", classes[form]}});
        ordered_json j;
        j["n"] = g.size();
        j["count"] = parts.size();
        j["partitions"] = parts;
        j["classes"] = cls;
        *json = dup(j.dump());
    });
}

ktb_status ktb_term_eval(const ktb_frame* f, const char* term, const char* bindings, ktb_format format, char** out)
{
    return guard([&] {
        require(f, "frame");
        require(term, "term");
        require(out, "out");
        std::string text = trim(term);
        const ktb::Term t = !text.empty() && text.front() == '{' ? ktb::Term::parse_json(text) : ktb::Term::parse(text);
        const ktb::Environment env = parse_bindings(*f, bindings);
        const ktb::Subset value = ktb::eval_term(f->frame, t, env);
        if (format == KTB_FORMAT_TEXT) {
            *out = dup(ktb::format_subset(f->frame, value));
            return;
        }
        if (format != KTB_FORMAT_JSON)
            throw ktb::Error(ktb::Errc::invalid_argument, "term values render as json or text");
        ordered_json j;
        j["term"] = t.to_text();
        for (const auto& [name, s] : env)
            j["bindings"][name] = names_of(f->frame, s);
        j["value"] = names_of(f->frame, value);
        j["text"] = ktb::format_subset(f->frame, value);
        *out = dup(j.dump());
    });
}

void ktb_verify_options_init(ktb_verify_options* opts)
{
    if (!opts)
        return;
    *opts = ktb_verify_options{KTB_MODE_AUTO, ktb::kDefaultSeed, ktb::kDefaultSamples, 1, 0, nullptr};
}

ktb_status ktb_verify_frame(const ktb_frame* f, const char* lemma, const ktb_verify_options* opts,
                            ktb_verdict* verdict, char** json)
{
    return guard([&] {
        require(f, "frame");
        if (f->family)
            run_verify(f->family->spec, f->frame, lemma, opts, f->family->spec.p, verdict, json);
        else
            run_verify(f->frame, f->frame, lemma, opts, 0, verdict, json);
    });
}

ktb_status ktb_verify_family(const char* spec, const char* lemma, const ktb_verify_options* opts,
                             ktb_verdict* verdict, char** json)
{
    return guard([&] {
        require(spec, "spec");
        const auto fam = ktb::build_truncation(ktb::FamilySpec::parse(spec));
        run_verify(fam.spec, fam.frame, lemma, opts, fam.spec.p, verdict, json);
    });
}

ktb_status ktb_list_lemmas(char** json)
{
    return guard([&] {
        require(json, "json");
        ordered_json a = ordered_json::array();
        for (const auto& l : ktb::list_lemmas()) {
            ordered_json e;
            e["id"] = l.id;
            e["applies_to"] = l.applicability == ktb::Applicability::any_frame ? "any" : "family";
            e["summary"] = l.summary;
            if (l.exploratory)
                e["exploratory"] = true;
            a.push_back(e);
        }
        *json = dup(a.dump());
    });
}

ktb_status ktb_search(size_t min_n, size_t max_n, const ktb_search_options* opts, ktb_line_callback cb, void* user,
                      ktb_search_summary* summary)
{
    return guard([&] {
        require(reinterpret_cast<const void*>(cb), "callback");
        auto s = ktb::search_covers(min_n, max_n, [&](const std::string& line) { cb(line.c_str(), user); },
                                    filter_options(opts));
        copy_summary(s, summary);
    });
}

ktb_status ktb_pipeline_new(const ktb_search_options* opts, ktb_line_callback cb, void* user, ktb_pipeline** out)
{
    return guard([&] {
        require(reinterpret_cast<const void*>(cb), "callback");
        require(out, "out");
        *out = new ktb_pipeline{
            ktb::CoverPipeline([cb, user](const std::string& line) { cb(line.c_str(), user); }, filter_options(opts))};
    });
}

ktb_status ktb_pipeline_push(ktb_pipeline* p, const char* graph6)
{
    return guard([&] {
        require(p, "pipeline");
        require(graph6, "graph6");
        p->pipe.push(graph6);
    });
}

ktb_status ktb_pipeline_finish(ktb_pipeline* p, ktb_search_summary* summary)
{
    return guard([&] {
        require(p, "pipeline");
        copy_summary(p->pipe.finish(), summary);
    });
}

void ktb_pipeline_free(ktb_pipeline* p) { delete p; }

ktb_status ktb_summary_json(const ktb_search_summary* summary, char** json)
{
    return guard([&] {
        require(summary, "summary");
        require(json, "json");
        *json = dup(ktb::summary_to_json({summary->total, summary->pass, summary->fail, summary->na}));
    });
}

} // extern "C"
