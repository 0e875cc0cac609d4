// SPDX-License-Identifier: Apache-2.0
#include "solitonkit/solitonkit.h"

#include "solitonkit/commands.hpp"
#include "solitonkit/error.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

struct sk_manifold {
    sk::ManifoldSpec spec;
};

struct sk_report {
    sk::CheckReport report;
};

namespace {

thread_local std::string g_last_error;

sk_status code_for(sk::ErrorKind kind)
{
    switch (kind) {
    case sk::ErrorKind::parse: return SK_ERR_PARSE;
    case sk::ErrorKind::domain: return SK_ERR_DOMAIN;
    case sk::ErrorKind::invalid_input: return SK_ERR_INVALID_INPUT;
    case sk::ErrorKind::unknown_name: return SK_ERR_UNKNOWN_NAME;
    case sk::ErrorKind::inconsistent: return SK_ERR_INCONSISTENT;
    case sk::ErrorKind::underdetermined: return SK_ERR_UNDERDETERMINED;
    case sk::ErrorKind::unsupported: return SK_ERR_UNSUPPORTED;
    case sk::ErrorKind::precondition: return SK_ERR_PRECONDITION;
    case sk::ErrorKind::io: return SK_ERR_IO;
    }
    return SK_ERR_INTERNAL;
}

template <class F>
sk_status guarded(F&& body)
{
    g_last_error.clear();
    try {
        body();
        return SK_OK;
    } catch (const sk::Error& e) {
        g_last_error = e.what();
        return code_for(e.kind());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
    } catch (const std::exception& e) {
        g_last_error = e.what();
    }
    return SK_ERR_INTERNAL;
}

sk_status null_argument(const char* what)
{
    g_last_error = std::string("null argument: ") + what;
    return SK_ERR_NULL_ARGUMENT;
}

char* copy_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
sk_status make_report(const sk_manifold* m, sk_report** out, F&& build)
{
    if (!m)
        return null_argument("manifold");
    if (!out)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] { *out = new sk_report{build(m->spec)}; });
}

template <class F>
sk_status make_manifold(sk_manifold** out, F&& build)
{
    if (!out)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] { *out = new sk_manifold{build()}; });
}

}  // namespace

extern "C" {

const char* sk_last_error(void) { return g_last_error.c_str(); }

const char* sk_status_name(sk_status status)
{
    switch (status) {
    case SK_OK: return "ok";
    case SK_ERR_PARSE: return "parse";
    case SK_ERR_DOMAIN: return "domain";
    case SK_ERR_INVALID_INPUT: return "invalid_input";
    case SK_ERR_UNKNOWN_NAME: return "unknown_name";
    case SK_ERR_INCONSISTENT: return "inconsistent";
    case SK_ERR_UNDERDETERMINED: return "underdetermined";
    case SK_ERR_UNSUPPORTED: return "unsupported";
    case SK_ERR_PRECONDITION: return "precondition";
    case SK_ERR_IO: return "io";
    case SK_ERR_NULL_ARGUMENT: return "null_argument";
    case SK_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

void sk_string_free(char* s) { std::free(s); }

sk_status sk_builtin_names(char** out)
{
    if (!out)
        return null_argument("out");
    return guarded([&] {
        std::string all;
        for (const auto& n : sk::builtin_names())
            all += n + "\n";
        *out = copy_string(all);
    });
}

sk_status sk_manifold_builtin(const char* name, sk_manifold** out)
{
    if (!name)
        return null_argument("name");
    return make_manifold(out, [&] { return sk::builtin(name); });
}

sk_status sk_manifold_parse(const char* text, sk_manifold** out)
{
    if (!text)
        return null_argument("text");
    return make_manifold(out, [&] { return sk::parse_manifold(text); });
}

sk_status sk_manifold_load(const char* path, sk_manifold** out)
{
    if (!path)
        return null_argument("path");
    return make_manifold(out, [&] { return sk::load_manifold_file(path); });
}

sk_status sk_manifold_serialize(const sk_manifold* m, char** out)
{
    if (!m)
        return null_argument("manifold");
    if (!out)
        return null_argument("out");
    return guarded([&] { *out = copy_string(sk::serialize_manifold(m->spec)); });
}

int sk_manifold_dim(const sk_manifold* m) { return m ? m->spec.manifold.dim : 0; }

void sk_manifold_free(sk_manifold* m) { delete m; }

sk_status sk_validate(const sk_manifold* m, int strict, sk_report** out)
{
    return make_report(m, out, [&](const sk::ManifoldSpec& s) { return sk::run_validate(s, strict != 0); });
}

sk_status sk_connection(const sk_manifold* m, sk_report** out) { return make_report(m, out, sk::run_connection); }
sk_status sk_curvature(const sk_manifold* m, sk_report** out) { return make_report(m, out, sk::run_curvature); }
sk_status sk_ricci(const sk_manifold* m, sk_report** out) { return make_report(m, out, sk::run_ricci); }
sk_status sk_check_contact(const sk_manifold* m, sk_report** out) { return make_report(m, out, sk::run_check_contact); }
sk_status sk_check_sasakian(const sk_manifold* m, sk_report** out) { return make_report(m, out, sk::run_check_sasakian); }
sk_status sk_check_normality(const sk_manifold* m, sk_report** out)
{
    return make_report(m, out, sk::run_check_normality);
}

sk_status sk_solve_lambda(const sk_manifold* m, const char* field, const char* flavor, int use_expected_ricci,
                          sk_report** out)
{
    if (!field || !flavor)
        return null_argument(field ? "flavor" : "field");
    return make_report(m, out, [&](const sk::ManifoldSpec& s) {
        return sk::run_solve_lambda(s, sk::parse_scalar_list(field), sk::parse_soliton_kind(flavor),
                                    use_expected_ricci != 0);
    });
}

sk_status sk_check_soliton(const sk_manifold* m, const char* field, const char* lambda, const char* flavor,
                           sk_report** out)
{
    if (!field || !lambda || !flavor)
        return null_argument(!field ? "field" : !lambda ? "lambda" : "flavor");
    return make_report(m, out, [&](const sk::ManifoldSpec& s) {
        return sk::run_check_soliton(s, sk::parse_scalar_list(field), sk::ParamScalar::parse(lambda),
                                     sk::parse_soliton_kind(flavor));
    });
}

sk_status sk_check_gradient(const sk_manifold* m, const char* df, const char* dlambda, const char* lambda,
                            const char* flavor, sk_report** out)
{
    if (!df || !lambda || !flavor)
        return null_argument(!df ? "df" : !lambda ? "lambda" : "flavor");
    return make_report(m, out, [&](const sk::ManifoldSpec& s) {
        sk::GradientData gd{sk::parse_scalar_list(df), std::nullopt};
        if (dlambda)
            gd.dlambda = sk::parse_scalar_list(dlambda);
        for (const auto* v : {&gd.df, gd.dlambda ? &*gd.dlambda : nullptr})
            if (v && static_cast<int>(v->size()) != s.manifold.dim)
                throw sk::Error(sk::ErrorKind::invalid_input, "gradient data has " + std::to_string(v->size())
                                                                  + " components, expected "
                                                                  + std::to_string(s.manifold.dim));
        return sk::run_check_gradient(s, gd, sk::ParamScalar::parse(lambda), sk::parse_soliton_kind(flavor));
    });
}

sk_status sk_theorem36(int dim, const char* p, sk_report** out)
{
    if (!out)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        std::optional<sk::Rational> bound;
        if (p)
            bound = sk::ParamScalar::parse(p).constant_value();
        *out = new sk_report{sk::run_theorem36(dim, bound)};
    });
}

sk_status sk_verify_paper_example(sk_report** out)
{
    if (!out)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] { *out = new sk_report{sk::run_verify_paper_example()}; });
}

sk_status sk_report_render(const sk_report* r, sk_format format, char** out)
{
    if (!r)
        return null_argument("report");
    if (!out)
        return null_argument("out");
    return guarded([&] {
        *out = copy_string(sk::emit_report(r->report, format == SK_FORMAT_JSON ? sk::ReportFormat::json
                                                                                : sk::ReportFormat::text));
    });
}

int sk_report_exit_code(const sk_report* r) { return r ? r->report.exit_code() : 3; }

void sk_report_free(sk_report* r) { delete r; }

}  // extern "C"
