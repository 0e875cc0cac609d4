// SPDX-License-Identifier: Apache-2.0
// Acceptance suite: one PASS/FAIL line per criterion. Commands named by a
// criterion are run through the CLI binary; the rest use the library.
#include "helpers.hpp"

#include "solitonkit/error.hpp"
#include "solitonkit/soliton.hpp"

#include "json.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <sys/wait.h>

using namespace sk;
using namespace testing;
using nlohmann::json;

namespace {

std::string g_cli;

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args)
{
    CliResult r;
    FILE* pipe = popen((g_cli + " " + args + " 2>/dev/null").c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json run_json(const std::string& args, int* exit_code = nullptr)
{
    CliResult r = run_cli(args + " --format json");
    if (exit_code)
        *exit_code = r.exit_code;
    return json::parse(r.out);
}

std::string value_of(const json& report, const std::string& name)
{
    for (const auto& v : report["values"])
        if (v["name"] == name)
            return v["value"];
    return "<missing>";
}

bool all_items_pass(const json& report)
{
    for (const auto& it : report["items"])
        if (it["status"] != "pass")
            return false;
    return !report["items"].empty();
}

// ---------------------------------------------------------------------------

bool criterion1(std::string& why)
{
    int code = 0;
    json r = run_json("connection --builtin heisenberg5", &code);
    const std::vector<std::pair<std::string, std::string>> expect{
        {"nabla_e1 e2", "e3"},  {"nabla_e2 e1", "-e3"}, {"nabla_e1 e3", "-e2"}, {"nabla_e3 e1", "-e2"},
        {"nabla_e4 e5", "e3"},  {"nabla_e4 e3", "-e5"}, {"nabla_e3 e5", "e4"},
    };
    for (const auto& [k, v] : expect)
        if (value_of(r, k) != v) {
            why = k + " = " + value_of(r, k);
            return false;
        }
    if (r["ledger"].size() != 1 || r["ledger"][0]["quantity"] != "nabla_e1 e2" || r["ledger"][0]["expected"] != "e1") {
        why = "ledger: " + r["ledger"].dump();
        return false;
    }
    return code == 2;
}

bool criterion2(std::string& why)
{
    for (const char* cmd : {"check-contact", "check-sasakian", "check-normality"}) {
        int code = -1;
        json r = run_json(std::string(cmd) + " --builtin heisenberg5", &code);
        if (code != 0 || r["overall"] != "pass" || !all_items_pass(r)) {
            why = std::string(cmd) + " -> " + r.dump();
            return false;
        }
    }
    json s = run_json("check-sasakian --builtin heisenberg5");
    bool reeb = false;
    for (const auto& it : s["items"])
        reeb = reeb || it["name"] == "Ric(xi,Z) = 4 g(xi,Z)";
    if (!reeb)
        why = "Reeb-Ricci item with 2n = 4 missing";
    return reeb;
}

bool criterion3(std::string& why)
{
    int code = 0;
    json r = run_json("ricci --builtin heisenberg5", &code);
    const ManifoldSpec h = builtin("heisenberg5");
    const ScalarTable s = ricci(h.manifold, curvature(h.manifold, levi_civita(h.manifold))).ric;
    bool diagonal = true;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (i != j)
                diagonal = diagonal && s(i, j).is_zero();
    bool ok = diagonal && s(0, 0) == ParamScalar(-2) && s(2, 2) == ParamScalar(4) && s(0, 0) == s(1, 1)
           && s(3, 3) == s(4, 4);
    ok = ok && value_of(r, "S") == render_table(s);
    std::set<std::string> q;
    for (const auto& e : r["ledger"])
        q.insert(e["quantity"]);
    ok = ok && r["ledger"].size() == 3 && q == std::set<std::string>{"S(e2,e2)", "S(e4,e4)", "S(e5,e5)"} && code == 2;
    if (!ok)
        why = r.dump();
    return ok;
}

bool criterion4(std::string& why)
{
    const std::string base = "solve-lambda --builtin heisenberg5 --field \"0,0,1,0,0\" --flavor conformal";
    json with = run_json(base + " --use-expected-ricci");
    json without = run_json(base);
    if (value_of(with, "lambda") != ParamScalar::parse("p/2 + 9/5").str()) {
        why = "with flag: " + value_of(with, "lambda");
        return false;
    }
    if (value_of(without, "lambda") != ParamScalar::parse("p/2 - 3/5").str()) {
        why = "without flag: " + value_of(without, "lambda");
        return false;
    }
    if (without["ledger"].size() != 1) {
        why = "ledger size " + std::to_string(without["ledger"].size());
        return false;
    }
    const std::string note = without["ledger"][0].value("note", "");
    bool both = note.find("10*lambda + -5*p + 6 = 0") != std::string::npos
             && note.find("10*lambda + -5*p + -18 = 0") != std::string::npos;
    if (!both)
        why = "note: " + note;
    return both;
}

bool criterion5(std::string& why)
{
    long tuples = 0;
    int jacobi_count = 0;
    for (const auto& name : builtin_names()) {
        const FrameManifold m = builtin(name).manifold;
        const int n = m.dim;
        const ConnectionTable conn = levi_civita(m);
        const CurvatureTensor riem = curvature(m, conn);
        const bool jacobi = validate(m, true).all_pass();
        jacobi_count += jacobi ? 1 : 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    if (conn.gamma(i, j, k) - conn.gamma(j, i, k) != ParamScalar(m.c(i, j, k))) {
                        why = name + ": torsion";
                        return false;
                    }
                    ParamScalar s;
                    for (int a = 0; a < n; ++a)
                        s += conn.gamma(i, j, a) * m.metric(a, k) + conn.gamma(i, k, a) * m.metric(j, a);
                    if (!s.is_zero()) {
                        why = name + ": metric compatibility";
                        return false;
                    }
                }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d) {
                        ++tuples;
                        const ParamScalar r = riem.lowered(m, a, b, c, d);
                        // cyclic sum = Jacobiator, zero whenever Jacobi holds
                        const ParamScalar cyclic = r + riem.lowered(m, b, c, a, d) + riem.lowered(m, c, a, b, d);
                        bool ok = r == -riem.lowered(m, b, a, c, d) && r == -riem.lowered(m, a, b, d, c)
                               && cyclic == ParamScalar(lowered_jacobiator(m, a, b, c, d))
                               && (!jacobi || (cyclic.is_zero() && r == riem.lowered(m, c, d, a, b)));
                        if (!ok) {
                            why = name + ": curvature symmetry at a tuple";
                            return false;
                        }
                    }
    }
        if (jacobi_count != 4)
        why = "expected exactly one non-Jacobi fixture";
    return jacobi_count == 4 && tuples == 3 * 81 + 2 * 625;
}

bool criterion6(std::string& why)
{
    int code = -1;
    json r = run_json("theorem36 --dim 5", &code);
    bool ok = code == 0 && value_of(r, "lambda") == "1/2*p + 26/5" && value_of(r, "einstein constant") == "4"
           && value_of(r, "threshold p") == "-52/5";
    if (!ok) {
        why = r.dump();
        return false;
    }
    const ParamScalar p = ParamScalar::symbol("p");
    for (int m : {3, 5, 7, 9}) {
        const ParamScalar closed = (Rational(m) * p + ParamScalar(Rational(2 * m * m + 2))) / Rational(2 * m);
        if (theorem36_derive(m).lambda != closed) {
            why = "closed form fails at m = " + std::to_string(m);
            return false;
        }
    }
    return true;
}

bool criterion7(std::string& why)
{
    std::mt19937 rng(7);
    for (const char* name : {"abelian3", "abelian5"}) {
        const FrameManifold m = builtin(name).manifold;
        const ConnectionTable conn = levi_civita(m);
        const CurvatureTensor riem = curvature(m, conn);
        const RicciTensor ric = ricci(m, riem);
        const ParamScalar lam = ParamScalar::symbol("p") / Rational(2) + ParamScalar(Rational(1, m.dim));
        for (int t = 0; t < 100; ++t) {
            GradientData gd{FrameVector(m.dim), FrameVector(m.dim)};
            for (auto& x : gd.df)
                x = ParamScalar(random_rational(rng, 10, 5));
            if (!is_zero(gradient_soliton_residual(m, conn, ric.ric, gd, lam, SolitonKind::conformal))) {
                why = std::string(name) + ": residual nonzero";
                return false;
            }
            CheckReport r = lemma32_check(m, conn, riem, ric, gd, lam, SolitonKind::conformal);
            bool zero_sides = r.values.size() == 2 && r.values[0].value == "0" && r.values[1].value == "0";
            if (!r.all_pass() || !zero_sides) {
                why = std::string(name) + ": curvature identity";
                return false;
            }
        }
    }
    return true;
}

bool criterion8(std::string& why)
{
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> pick(0, 4);
    for (int t = 0; t < 100; ++t) {
        FrameVector df, dl;
        for (int i = 0; i < 5; ++i) {
            Rational x = random_rational(rng, 10, 5);
            df.emplace_back(x);
            dl.emplace_back(-x);
        }
        if (!theorem34_check({df, dl}).all_pass()) {
            why = "paired vectors rejected";
            return false;
        }
        for (int i = 0; i < 5; ++i) {
            FrameVector bumped = dl;
            Rational eps = random_rational(rng, 10, 5);
            if (eps.is_zero())
                eps = Rational(1, 7);
            bumped[i] += ParamScalar(eps);
            if (theorem34_check({df, bumped}).all_pass()) {
                why = "perturbation accepted";
                return false;
            }
        }
    }
    return true;
}

bool criterion9(std::string& why)
{
    for (const auto& name : builtin_names()) {
        const FrameManifold m = builtin(name).manifold;
        const oracle::Cube c = oracle_structure(m);
        const oracle::Cube og = oracle::connection(c, oracle_metric(m));
        const oracle::Quad orr = oracle::curvature(c, og);
        const ConnectionTable conn = levi_civita(m);
        const CurvatureTensor riem = curvature(m, conn);
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < m.dim; ++j)
                for (int k = 0; k < m.dim; ++k) {
                    if (conn.gamma(i, j, k) != ParamScalar(Rational(og[i][j][k]))) {
                        why = name + ": connection";
                        return false;
                    }
                    for (int l = 0; l < m.dim; ++l)
                        if (riem.riem(i, j, k, l) != ParamScalar(Rational(orr[i][j][k][l]))) {
                            why = name + ": curvature";
                            return false;
                        }
                }
    }
    return true;
}

bool criterion10(std::string& why)
{
    for (const auto& name : builtin_names()) {
        const ManifoldSpec a = builtin(name);
        const ManifoldSpec b = parse_manifold(serialize_manifold(a));
        if (!(a == b) || serialize_manifold(b) != serialize_manifold(a)) {
            why = name + " does not round-trip";
            return false;
        }
    }
    std::vector<CliResult> runs;
    for (int i = 0; i < 3; ++i)
        runs.push_back(run_cli("verify-paper-example --format json"));
    if (runs[0].out.empty() || runs[0].exit_code != 2) {
        why = "verify-paper-example exit " + std::to_string(runs[0].exit_code);
        return false;
    }
    if (runs[0].out != runs[1].out || runs[1].out != runs[2].out) {
        why = "JSON differs across runs";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    const std::vector<std::pair<const char*, std::function<bool(std::string&)>>> criteria{
        {"Koszul connection reproduction with one connection ledger record", criterion1},
        {"contact, Sasakian and normality checks pass on heisenberg5", criterion2},
        {"Ricci reproduction with three Ricci ledger records", criterion3},
        {"lambda solved with expected and computed Ricci", criterion4},
        {"tensor identities on every catalog manifold (Bianchi sum = Jacobiator)", criterion5},
        {"concurrent-field pipeline in dimension 5 and closed form for m = 3,5,7,9", criterion6},
        {"gradient residual and curvature identity on random abelian data", criterion7},
        {"lambda + f constancy on paired vectors and perturbations", criterion8},
        {"engine agrees with the naive oracle", criterion9},
        {"round trip and byte-identical JSON", criterion10},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, fn] : criteria) {
        ++index;
        std::string why;
        bool ok = false;
        try {
            ok = fn(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << ": " << name;
        if (!ok && !why.empty())
            std::cout << " (" << why << ")";
        std::cout << '\n';
        failed += ok ? 0 : 1;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
