// SPDX-License-Identifier: Apache-2.0
// Command-line front end; talks to the engine only through the C API.
#include "solitonkit/solitonkit.h"

#include "CLI11.hpp"

#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>

namespace {

constexpr int kUsageError = 3;

struct Source {
    std::string builtin;
    std::string file;
};

struct Options {
    Source source;
    std::string format = "text";
    bool strict = false;
    std::string field;
    std::string flavor;
    std::string lambda;
    std::string df;
    std::optional<std::string> dlambda;
    bool use_expected_ricci = false;
    int dim = 0;
    std::optional<std::string> p;
};

int fail(sk_status status)
{
    std::fprintf(stderr, "error (%s): %s\n", sk_status_name(status), sk_last_error());
    return kUsageError;
}

int finish(sk_status status, sk_report* report, const std::string& format)
{
    if (status != SK_OK)
        return fail(status);
    char* text = nullptr;
    status = sk_report_render(report, format == "json" ? SK_FORMAT_JSON : SK_FORMAT_TEXT, &text);
    if (status != SK_OK) {
        sk_report_free(report);
        return fail(status);
    }
    std::fputs(text, stdout);
    sk_string_free(text);
    int code = sk_report_exit_code(report);
    sk_report_free(report);
    return code;
}

void add_source(CLI::App* cmd, Source& src)
{
    auto* b = cmd->add_option("--builtin", src.builtin, "Builtin manifold name");
    auto* f = cmd->add_option("--file", src.file, "Manifold definition file");
    b->excludes(f);
    cmd->callback([cmd, b, f] {
        if (b->count() == 0 && f->count() == 0)
            throw CLI::RequiredError(cmd->get_name() + ": one of --builtin or --file");
    });
}

void add_format(CLI::App* cmd, std::string& format)
{
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_flavor(CLI::App* cmd, std::string& flavor)
{
    cmd->add_option("--flavor", flavor, "Soliton flavor")
        ->required()
        ->check(CLI::IsMember({"ricci", "almost_ricci", "conformal", "almost_conformal"}));
}

using ManifoldCommand = std::function<sk_status(const sk_manifold*, sk_report**)>;

int with_manifold(const Options& o, const ManifoldCommand& run)
{
    sk_manifold* m = nullptr;
    sk_status status = o.source.builtin.empty() ? sk_manifold_load(o.source.file.c_str(), &m)
                                                : sk_manifold_builtin(o.source.builtin.c_str(), &m);
    if (status != SK_OK)
        return fail(status);
    sk_report* report = nullptr;
    status = run(m, &report);
    sk_manifold_free(m);
    return finish(status, report, o.format);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact curvature and soliton checks on frame manifolds", "solitonkit"};
    app.require_subcommand(1);
    Options o;
    std::map<CLI::App*, std::function<int()>> actions;

    auto manifold_cmd = [&](const char* name, const char* help, ManifoldCommand run) {
        CLI::App* cmd = app.add_subcommand(name, help);
        add_source(cmd, o.source);
        add_format(cmd, o.format);
        actions[cmd] = [&o, run] { return with_manifold(o, run); };
        return cmd;
    };

    CLI::App* validate = manifold_cmd("validate", "Check the presentation invariants",
                                      [&](const sk_manifold* m, sk_report** r) { return sk_validate(m, o.strict, r); });
    validate->add_flag("--strict", o.strict, "Also check the Jacobi identity");

    manifold_cmd("connection", "Levi-Civita connection table", sk_connection);
    manifold_cmd("curvature", "Curvature tensor and its symmetries", sk_curvature);
    manifold_cmd("ricci", "Ricci tensor and scalar curvature", sk_ricci);
    manifold_cmd("check-contact", "Almost-contact metric axioms", sk_check_contact);
    manifold_cmd("check-sasakian", "Sasakian identity and its curvature consequences", sk_check_sasakian);
    manifold_cmd("check-normality", "Normality of the almost-contact structure", sk_check_normality);

    CLI::App* solve = manifold_cmd("solve-lambda", "Solve the traced soliton equation for lambda",
                                   [&](const sk_manifold* m, sk_report** r) {
                                       return sk_solve_lambda(m, o.field.c_str(), o.flavor.c_str(),
                                                              o.use_expected_ricci, r);
                                   });
    solve->add_option("--field", o.field, "Soliton vector field \"a1,...,am\"")->required();
    add_flavor(solve, o.flavor);
    solve->add_flag("--use-expected-ricci", o.use_expected_ricci, "Use the file's expected Ricci values");

    CLI::App* soliton = manifold_cmd("check-soliton", "Check the soliton equation at a given lambda",
                                     [&](const sk_manifold* m, sk_report** r) {
                                         return sk_check_soliton(m, o.field.c_str(), o.lambda.c_str(),
                                                                 o.flavor.c_str(), r);
                                     });
    soliton->add_option("--field", o.field, "Soliton vector field \"a1,...,am\"")->required();
    soliton->add_option("--lambda", o.lambda, "Lambda expression")->required();
    add_flavor(soliton, o.flavor);

    CLI::App* gradient = manifold_cmd("check-gradient", "Check the gradient soliton equation",
                                      [&](const sk_manifold* m, sk_report** r) {
                                          return sk_check_gradient(m, o.df.c_str(),
                                                                   o.dlambda ? o.dlambda->c_str() : nullptr,
                                                                   o.lambda.c_str(), o.flavor.c_str(), r);
                                      });
    gradient->add_option("--df", o.df, "Frame derivatives of f \"c1,...,cm\"")->required();
    gradient->add_option("--dlambda", o.dlambda, "Frame derivatives of lambda \"d1,...,dm\"");
    gradient->add_option("--lambda", o.lambda, "Lambda expression")->required();
    add_flavor(gradient, o.flavor);

    CLI::App* t36 = app.add_subcommand("theorem36", "Concurrent-field conformal soliton in odd dimension");
    t36->add_option("--dim", o.dim, "Odd dimension m >= 3")->required();
    t36->add_option("--p", o.p, "Bind the pressure before classifying");
    add_format(t36, o.format);
    actions[t36] = [&] {
        sk_report* r = nullptr;
        sk_status s = sk_theorem36(o.dim, o.p ? o.p->c_str() : nullptr, &r);
        return finish(s, r, o.format);
    };

    CLI::App* verify = app.add_subcommand("verify-paper-example", "Full pipeline on heisenberg5 with ledger");
    add_format(verify, o.format);
    actions[verify] = [&] {
        sk_report* r = nullptr;
        sk_status s = sk_verify_paper_example(&r);
        return finish(s, r, o.format);
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }
    for (auto& [cmd, action] : actions)
        if (cmd->parsed())
            return action();
    return kUsageError;
}
