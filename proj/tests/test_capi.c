/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "ktb/ktb.h"

static int failures = 0;

#define EXPECT(cond)                                                          \
    do {                                                                      \
        if (!(cond)) {                                                        \
            fprintf(stderr, "%s:%d: expectation failed: %s\n", __FILE__,      \
                    __LINE__, #cond);                                         \
            ++failures;                                                       \
        }                                                                     \
    } while (0)

static int contains(const char* hay, const char* needle) { return hay && strstr(hay, needle) != NULL; }

struct lines {
    int count;
    char last[512];
};

static void collect(const char* line, void* user)
{
    struct lines* l = (struct lines*)user;
    ++l->count;
    strncpy(l->last, line, sizeof l->last - 1);
    l->last[sizeof l->last - 1] = '\0';
}

int main(void)
{
    ktb_frame* f = NULL;
    char* s = NULL;
    ktb_verdict v;

    EXPECT(ktb_frame_preset("g1", &f) == KTB_OK);
    EXPECT(ktb_frame_vertex_count(f) == 11);
    EXPECT(ktb_check_cover(f, &v, &s) == KTB_OK);
    EXPECT(v == KTB_PASS);
    EXPECT(contains(s, "\"status\":\"pass\""));
    ktb_string_free(s);

    EXPECT(ktb_frame_export(f, KTB_FORMAT_GRAPH6, &s) == KTB_OK);
    {
        ktb_frame* g = NULL;
        char* t = NULL;
        EXPECT(ktb_frame_from_graph6(s, &g) == KTB_OK);
        EXPECT(ktb_frame_export(g, KTB_FORMAT_GRAPH6, &t) == KTB_OK);
        EXPECT(strcmp(s, t) == 0);
        ktb_string_free(t);
        ktb_frame_free(g);
    }
    ktb_string_free(s);

    EXPECT(ktb_frame_export(f, KTB_FORMAT_DOT, &s) == KTB_OK);
    EXPECT(contains(s, "graph"));
    ktb_string_free(s);
    EXPECT(ktb_frame_export(f, KTB_FORMAT_JSON, &s) == KTB_OK);
    EXPECT(contains(s, "\"n\":11"));
    ktb_string_free(s);

    EXPECT(ktb_term_eval(f, "And(Dia(Var x))(Not(Var x))", "x=D", KTB_FORMAT_TEXT, &s) == KTB_OK);
    EXPECT(s && strcmp(s, "{c1}") == 0);
    ktb_string_free(s);
    EXPECT(ktb_term_eval(f, "Dia(Var x)", "x={d, b1}", KTB_FORMAT_JSON, &s) == KTB_OK);
    EXPECT(contains(s, "\"text\":\"{d, c1, b1, a}\""));
    ktb_string_free(s);
    EXPECT(ktb_term_eval(f, "Dia(", "", KTB_FORMAT_JSON, &s) == KTB_ERR_PARSE);
    EXPECT(strlen(ktb_last_error()) > 0);
    ktb_frame_free(f);

    {
        size_t edges[] = {0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 0};
        EXPECT(ktb_frame_from_edges(6, edges, 6, &f) == KTB_OK);
        EXPECT(ktb_check_cover(f, &v, &s) == KTB_OK);
        EXPECT(v == KTB_FAIL);
        EXPECT(contains(s, "\"blocks\":3"));
        ktb_string_free(s);
        EXPECT(ktb_quotients(f, 3, 3, &s) == KTB_OK);
        EXPECT(contains(s, "\"partitions\""));
        ktb_string_free(s);
        EXPECT(ktb_verify_frame(f, "ddd", NULL, &v, &s) == KTB_ERR_NOT_APPLICABLE);
        ktb_frame_free(f);
    }
    {
        size_t bad[] = {0, 0};
        f = NULL;
        EXPECT(ktb_frame_from_edges(2, bad, 1, &f) == KTB_ERR_INVALID_ARGUMENT);
        EXPECT(f == NULL);
    }

    EXPECT(ktb_frame_from_graph6("A_", &f) == KTB_OK);
    EXPECT(ktb_check_cover(f, &v, NULL) == KTB_OK);
    EXPECT(v == KTB_NOT_APPLICABLE);
    ktb_frame_free(f);
    EXPECT(ktb_frame_from_graph6(">>graph6<<A_", &f) == KTB_ERR_PARSE);
    EXPECT(ktb_frame_family("N=3;p=4", &f) != KTB_OK);
    EXPECT(ktb_frame_preset("g9", &f) == KTB_ERR_INVALID_ARGUMENT);

    {
        ktb_verify_options o;
        ktb_verify_options_init(&o);
        EXPECT(o.seed == 20190611u);
        o.mode = KTB_MODE_EXHAUSTIVE;
        EXPECT(ktb_verify_family("N=2;p=4", "ddd", &o, &v, &s) == KTB_OK);
        EXPECT(v == KTB_PASS);
        EXPECT(contains(s, "\"lemma\":\"ddd\""));
        EXPECT(!contains(s, "millis"));
        ktb_string_free(s);
        o.against = "N=2";
        EXPECT(ktb_verify_family("N=;p=6", "diff", &o, &v, &s) == KTB_OK);
        EXPECT(v == KTB_PASS);
        ktb_string_free(s);
        o.against = NULL;
        EXPECT(ktb_verify_family("N=;p=3", "all", &o, &v, &s) == KTB_OK);
        EXPECT(v == KTB_PASS);
        EXPECT(contains(s, "\"reports\""));
        ktb_string_free(s);
    }

    EXPECT(ktb_list_lemmas(&s) == KTB_OK);
    EXPECT(contains(s, "\"small_analog\""));
    ktb_string_free(s);

    {
        struct lines got = {0, ""};
        ktb_search_options so = {2, 0};
        ktb_search_summary sum;
        EXPECT(ktb_search(4, 4, &so, collect, &got, &sum) == KTB_OK);
        EXPECT(got.count == 6);
        EXPECT(sum.total == 6);
        EXPECT(sum.pass + sum.fail + sum.na == 6);
        EXPECT(ktb_search(1, 11, &so, collect, &got, &sum) == KTB_ERR_TIER_EXCEEDED);
        EXPECT(ktb_summary_json(&sum, &s) == KTB_OK);
        EXPECT(contains(s, "\"summary\""));
        ktb_string_free(s);
    }
    {
        struct lines got = {0, ""};
        ktb_search_options so = {1, 0};
        ktb_pipeline* p = NULL;
        ktb_search_summary sum;
        EXPECT(ktb_pipeline_new(&so, collect, &got, &p) == KTB_OK);
        EXPECT(ktb_pipeline_push(p, "Bw") == KTB_OK);
        EXPECT(ktb_pipeline_push(p, "E{Sw") == KTB_OK);
        EXPECT(ktb_pipeline_finish(p, &sum) == KTB_OK);
        ktb_pipeline_free(p);
        EXPECT(got.count == 2);
        EXPECT(sum.pass == 1);
        EXPECT(contains(got.last, "\"seq\":2"));
    }

    EXPECT(strcmp(ktb_status_name(KTB_ERR_TIER_EXCEEDED), "tier_exceeded") == 0);
    ktb_string_free(NULL);
    ktb_frame_free(NULL);

    if (failures)
        fprintf(stderr, "%d expectation(s) failed\n", failures);
    else
        printf("C interface: all checks passed\n");
    return failures ? 1 : 0;
}
