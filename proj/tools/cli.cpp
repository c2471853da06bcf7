#include "n2vx/cli.hpp"

#include "n2vx/affine_sl2.hpp"
#include "n2vx/classification.hpp"
#include "n2vx/errors.hpp"
#include "n2vx/free_field.hpp"
#include "n2vx/verify_suites.hpp"
#include "n2vx/verma_n2.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace n2vx::cli {
namespace {

using Json = nlohmann::ordered_json;
using Rows = std::vector<std::vector<std::string>>;

// ---------------------------------------------------------------------------
// Output plumbing.

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    q += '"';
    return q;
}

std::string render_csv(const Rows& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_field(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_table(const Rows& rows) {
    std::vector<size_t> width;
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.resize(i + 1, 0);
            width[i] = std::max(width[i], row[i].size());
        }
    std::string out;
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += "  ";
            out += row[i];
            if (i + 1 < row.size()) out.append(width[i] - row[i].size(), ' ');
        }
        out += '\n';
    }
    return out;
}

struct Sink {
    std::ostream& out;
    std::ostream& err;
    std::string format;
    std::string out_file;

    int emit(const Json& record, const Rows& csv_rows, const Rows& table_rows) const {
        std::string text;
        if (format == "json")
            text = record.dump(2) + "\n";
        else if (format == "csv")
            text = render_csv(csv_rows);
        else
            text = render_table(table_rows);
        if (out_file.empty()) {
            out << text;
            return 0;
        }
        std::ofstream f(out_file, std::ios::binary);
        if (!f) {
            err << "n2vx: cannot open '" << out_file << "' for writing\n";
            return 1;
        }
        f << text;
        if (!f.good()) {
            err << "n2vx: short write to '" << out_file << "'\n";
            return 1;
        }
        return 0;
    }
};

std::string monomial_str(const N2Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += ' ';
        s += m[i].str();
    }
    return s;
}

const char* verdict_tag(ModuleClass c) {
    switch (c) {
        case ModuleClass::NotAdmissible: return "NotAdmissible";
        case ModuleClass::InW: return "InW";
        case ModuleClass::InD: return "InD";
        case ModuleClass::NotModule: return "NotModule";
    }
    return "NotModule";
}

// ---------------------------------------------------------------------------
// Option storage shared by the subcommands; only one of them parses per run.

struct CmdOpts {
    std::string m = "1";
    std::string h, q, c, level, depth;
    int charge = 0;
    std::string what = "W";
    std::string suite = "all";
    std::string format = "table";
    std::string out_file;
};

Rational opt_rational(const std::string& s) { return *Rational::parse(s); }
HalfInt opt_half_int(const std::string& s) { return *HalfInt::parse(s); }

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const Sink& sk, const CmdOpts& o) {
    const Rational m = opt_rational(o.m), h = opt_rational(o.h), q = opt_rational(o.q);
    const Classification cl = classify(m, h, q);
    const std::string tag = verdict_tag(cl.result);

    Json rec;
    rec["command"] = "classify";
    rec["inputs"] = Json{{"m", m.str()}, {"h", h.str()}, {"q", q.str()}};
    Json res;
    res["verdict"] = tag;
    if (m != Rational(-2)) res["central_charge"] = central_charge(m).str();
    std::string wit_r, wit_i, wit_table = "-";
    if (cl.result == ModuleClass::InW) {
        const WEntry& w = *cl.w;
        res["witness"] =
            Json{{"r", w.r}, {"i", w.i}, {"j", w.j.str()}, {"k", w.k.str()}};
        wit_r = std::to_string(w.r);
        wit_i = std::to_string(w.i);
        wit_table = "r=" + wit_r + " i=" + wit_i + " j=" + w.j.str() + " k=" + w.k.str();
    } else if (cl.result == ModuleClass::InD) {
        // witnesses come ascending; the last one is the root >= -1
        const std::string canonical = cl.d_witnesses.back().str();
        res["witness"] = Json{{"r", canonical}};
        Json all = Json::array();
        for (const auto& r : cl.d_witnesses) all.push_back(r.str());
        res["witnesses"] = all;
        wit_r = canonical;
        wit_table = "r=" + canonical;
    }
    rec["result"] = res;

    Rows csv_rows{{"m", "h", "q", "verdict", "witness_r", "witness_i"},
                  {m.str(), h.str(), q.str(), tag, wit_r, wit_i}};
    Rows table_rows{{"command", "classify"},
                    {"m", m.str()},
                    {"h", h.str()},
                    {"q", q.str()},
                    {"verdict", tag},
                    {"central charge", m == Rational(-2) ? "undefined" : central_charge(m).str()},
                    {"witness", wit_table}};
    if (cl.result == ModuleClass::InD) {
        std::string all;
        for (const auto& r : cl.d_witnesses) {
            if (!all.empty()) all += ' ';
            all += r.str();
        }
        table_rows.push_back({"all witnesses", all});
    }
    return sk.emit(rec, csv_rows, table_rows);
}

// ---------------------------------------------------------------------------
// enum

int cmd_enum(const Sink& sk, const CmdOpts& o) {
    const Rational m = opt_rational(o.m);
    Json rec;
    rec["command"] = "enum";
    rec["inputs"] = Json{{"what", o.what}, {"m", m.str()}};
    Json res;
    Rows rows;

    if (o.what == "W") {
        const auto ws = enumerate_W(m);
        res["count"] = ws.size();
        Json entries = Json::array();
        rows.push_back({"r", "i", "j", "k", "h", "q"});
        for (const WEntry& w : ws) {
            entries.push_back(Json{{"r", w.r},
                                   {"i", w.i},
                                   {"j", w.j.str()},
                                   {"k", w.k.str()},
                                   {"h", w.h.str()},
                                   {"q", w.q.str()}});
            rows.push_back({std::to_string(w.r), std::to_string(w.i), w.j.str(), w.k.str(),
                            w.h.str(), w.q.str()});
        }
        res["entries"] = entries;
    } else if (o.what == "S") {
        const auto ss = enumerate_S(m);
        res["count"] = ss.size();
        Json values = Json::array();
        rows.push_back({"r"});
        for (const Rational& r : ss) {
            values.push_back(r.str());
            rows.push_back({r.str()});
        }
        res["values"] = values;
    } else {
        const auto ps = enumerate_P(m);
        res["count"] = ps.size();
        Json entries = Json::array();
        rows.push_back({"lambda0", "lambda1"});
        for (const AdmissibleWeight& w : ps) {
            entries.push_back(Json{{"lambda0", w.lambda0.str()}, {"lambda1", w.lambda1.str()}});
            rows.push_back({w.lambda0.str(), w.lambda1.str()});
        }
        res["entries"] = entries;
    }
    rec["result"] = res;
    return sk.emit(rec, rows, rows);
}

// ---------------------------------------------------------------------------
// gram / singular

int cmd_gram(const Sink& sk, const CmdOpts& o) {
    const Rational h = opt_rational(o.h), q = opt_rational(o.q), c = opt_rational(o.c);
    const HalfInt level = opt_half_int(o.level);
    const auto M = make_verma(h, q, c);
    const auto& basis = M->basis(level, o.charge);
    const auto g = M->gram(level, o.charge);
    const int n = static_cast<int>(basis.size());

    Json rec;
    rec["command"] = "gram";
    rec["inputs"] = Json{{"h", h.str()},
                         {"q", q.str()},
                         {"c", c.str()},
                         {"level", level.str()},
                         {"charge", o.charge}};
    Json res;
    res["dimension"] = n;
    res["rank"] = rank(g);
    Json bj = Json::array();
    for (const auto& b : basis) bj.push_back(monomial_str(b));
    res["basis"] = bj;
    Json matrix = Json::array();
    Rows csv_rows;
    Rows table_rows;
    {
        std::vector<std::string> head{""};
        for (const auto& b : basis) head.push_back(monomial_str(b));
        table_rows.push_back(std::move(head));
    }
    for (int i = 0; i < n; ++i) {
        Json jrow = Json::array();
        std::vector<std::string> crow;
        std::vector<std::string> trow{monomial_str(basis[static_cast<size_t>(i)])};
        for (int j = 0; j < n; ++j) {
            const std::string v = g.at(i, j).str();
            jrow.push_back(v);
            crow.push_back(v);
            trow.push_back(v);
        }
        matrix.push_back(std::move(jrow));
        csv_rows.push_back(std::move(crow));
        table_rows.push_back(std::move(trow));
    }
    res["matrix"] = matrix;
    rec["result"] = res;
    if (n == 0) table_rows = {{"empty weight space"}};
    return sk.emit(rec, csv_rows, table_rows);
}

int cmd_singular(const Sink& sk, const CmdOpts& o) {
    const Rational h = opt_rational(o.h), q = opt_rational(o.q), c = opt_rational(o.c);
    const HalfInt level = opt_half_int(o.level);
    const auto M = make_verma(h, q, c);
    const auto vs = M->singular_vectors(level, o.charge);

    Json rec;
    rec["command"] = "singular";
    rec["inputs"] = Json{{"h", h.str()},
                         {"q", q.str()},
                         {"c", c.str()},
                         {"level", level.str()},
                         {"charge", o.charge}};
    Json res;
    res["count"] = vs.size();
    Json jvs = Json::array();
    Rows rows{{"vector", "monomial", "coefficient"}};
    for (size_t i = 0; i < vs.size(); ++i) {
        Json terms = Json::array();
        for (const auto& [mon, coeff] : vs[i]) {
            terms.push_back(Json{{"monomial", monomial_str(mon)}, {"coefficient", coeff.str()}});
            rows.push_back({std::to_string(i), monomial_str(mon), coeff.str()});
        }
        jvs.push_back(std::move(terms));
    }
    res["vectors"] = jvs;
    rec["result"] = res;
    Rows table_rows = vs.empty() ? Rows{{"no singular vectors"}} : rows;
    return sk.emit(rec, rows, table_rows);
}

// ---------------------------------------------------------------------------
// verify

constexpr const char* kFaceValueName = "h(0) y = 0 (face value)";

long capped_whole(long n, bool has_cap, HalfInt cap) {
    if (!has_cap) return n;
    const long cw = cap.twice() / 2;
    return std::min(n, cw);
}

int cmd_verify(const Sink& sk, const CmdOpts& o) {
    const Rational m = opt_rational(o.m);

    bool has_cap = false;
    HalfInt cap;
    if (const char* env = std::getenv("N2VX_MAX_DEPTH")) {
        auto p = HalfInt::parse(env);
        if (!p) {
            sk.err << "n2vx: N2VX_MAX_DEPTH is not a half integer: '" << env << "'\n";
            return 1;
        }
        has_cap = true;
        cap = *p;
    }

    const bool wants_integer_depth = o.suite == "jacobi" || o.suite == "fminus";
    HalfInt depth = HalfInt::whole(o.suite == "jacobi" ? 3 : o.suite == "fminus" ? 6 : 2);
    if (!o.depth.empty()) depth = opt_half_int(o.depth);
    if (wants_integer_depth && !depth.is_integer()) {
        sk.err << "n2vx: --suite " << o.suite << " needs an integer depth, got "
               << depth.str() << "\n";
        return 1;
    }
    if (has_cap && depth > cap) {
        depth = cap;
        sk.err << "n2vx: depth capped at " << cap.str() << " by N2VX_MAX_DEPTH\n";
    }

    std::vector<CosetCheck> checks;
    Json detail;

    auto run_jacobi = [&](long n) {
        for (const SuiteCheck& s : jacobi_suite(n))
            checks.push_back({"jacobi: " + s.name, s.passed});
    };
    auto run_fminus = [&](long n) {
        const LatticeSpace space;
        for (const FminusCheck& c : verify_prop_fminus(space, n))
            checks.push_back({"fminus: " + c.name, c.passed});
    };
    auto run_ks = [&](HalfInt d) {
        const KsReport r = verify_ks(m, d);
        Json cands = Json::array();
        for (const auto& [name, ok] : r.candidates)
            cands.push_back(Json{{"wiring", name}, {"filter_passed", ok}});
        detail["ks"] = Json{{"found", r.found},
                            {"resolved", r.found ? r.resolved.str() : ""},
                            {"central", r.central.str()},
                            {"candidates", cands}};
        checks.push_back({"ks: wiring search resolves a unique candidate", r.found});
        for (const CosetCheck& c : r.checks) checks.push_back({"ks: " + c.name, c.passed});
    };
    auto run_antiks = [&](HalfInt d) {
        const AntiKsReport r = verify_antiks(m, -1, d);
        detail["anti_ks"] = Json{{"ysign", r.ysign}};
        for (const CosetCheck& c : r.checks) {
            // the face value line replays the generator table verbatim and
            // must fail; report it with the expectation folded in
            if (c.name == kFaceValueName)
                checks.push_back({"anti-ks: face value line fails as printed", !c.passed});
            else
                checks.push_back({"anti-ks: " + c.name, c.passed});
        }
    };
    auto run_casimir = [&]() {
        const Rational cm = central_charge(m);
        const std::vector<std::pair<Rational, Rational>> pairs{
            {Rational(0), Rational(0)},
            {Rational(1), Rational(0)},
            {Rational(1, 6), Rational(-1, 3)},
            {Rational(1, 8), Rational(1, 2)},
            {Rational(-3, 40), Rational(7, 3)},
        };
        for (const Rational& c : {cm, cm + Rational(1)}) {
            for (const auto& [h, q] : pairs) {
                const CasimirReport r = casimir_identity(m, h, q, c);
                const bool ok = r.is_eigenvector && r.value == r.expected &&
                                r.h0 == r.h0_expected;
                checks.push_back({"casimir: Omega at (h=" + h.str() + ", q=" + q.str() +
                                      ", c=" + c.str() +
                                      ") equals 2(m+2)h + (m+2)^2 q^2 / 2",
                                  ok});
            }
        }
    };

    if (o.suite == "jacobi") {
        run_jacobi(depth.twice() / 2);
    } else if (o.suite == "fminus") {
        run_fminus(depth.twice() / 2);
    } else if (o.suite == "ks") {
        run_ks(depth);
    } else if (o.suite == "anti-ks") {
        run_antiks(depth);
    } else if (o.suite == "casimir-identity") {
        run_casimir();
    } else {
        run_jacobi(capped_whole(3, has_cap, cap));
        run_fminus(capped_whole(6, has_cap, cap));
        run_ks(depth);
        run_antiks(depth);
        run_casimir();
    }

    size_t failed = 0;
    for (const CosetCheck& c : checks)
        if (!c.passed) ++failed;

    Json rec;
    rec["command"] = "verify";
    Json inputs;
    inputs["suite"] = o.suite;
    inputs["m"] = m.str();
    if (o.suite != "casimir-identity") inputs["depth"] = depth.str();
    rec["inputs"] = inputs;
    Json res;
    res["passed"] = failed == 0;
    res["total"] = checks.size();
    res["failed"] = failed;
    for (auto& [k, v] : detail.items()) res[k] = v;
    Json jchecks = Json::array();
    Rows rows{{"check", "passed"}};
    for (const CosetCheck& c : checks) {
        jchecks.push_back(Json{{"name", c.name}, {"passed", c.passed}});
        rows.push_back({c.name, c.passed ? "true" : "false"});
    }
    res["checks"] = jchecks;
    rec["result"] = res;

    Rows table_rows = rows;
    table_rows.push_back({"overall", failed == 0 ? "PASS" : "FAIL"});
    const int emit_rc = sk.emit(rec, rows, table_rows);
    if (emit_rc != 0) return emit_rc;
    return verify_exit_code(checks);
}

}  // namespace

int verify_exit_code(const std::vector<CosetCheck>& checks) {
    for (const CosetCheck& c : checks)
        if (!c.passed) return 2;
    return 0;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "exact arithmetic for the N=2 superconformal algebra: module "
        "classification, Gram forms, singular vectors, and coset "
        "verification",
        "n2vx"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");
    app.footer("rationals are written p/q in lowest terms; values starting "
               "with '-' are safest given as --flag=value");

    CmdOpts o;
    int rc = 0;

    const CLI::Validator rational_ck(
        [](std::string& s) -> std::string {
            return Rational::parse(s) ? std::string{}
                                      : "'" + s + "' is not a rational p/q";
        },
        "RAT");
    const CLI::Validator half_int_ck(
        [](std::string& s) -> std::string {
            return HalfInt::parse(s) ? std::string{}
                                     : "'" + s + "' is not a half integer n or n/2";
        },
        "HALFRAT");

    auto add_sub = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->set_help_flag("--help", "print help");
        return sub;
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "table"}))
            ->capture_default_str();
        sub->add_option("--out", o.out_file, "write the record to FILE instead of stdout");
    };
    auto sink = [&]() { return Sink{out, err, o.format, o.out_file}; };

    auto* c_classify = add_sub(
        "classify", "decide whether (h, q) labels an irreducible module at level m");
    c_classify->add_option("--m", o.m, "level m")->required()->check(rational_ck);
    c_classify->add_option("--h", o.h, "conformal weight h")->required()->check(rational_ck);
    c_classify->add_option("--q", o.q, "u(1) charge q")->required()->check(rational_ck);
    add_common(c_classify);
    c_classify->callback([&] { rc = cmd_classify(sink(), o); });

    auto* c_enum = add_sub(
        "enum", "enumerate the discrete family W, the set S, or the admissible weights P");
    c_enum->add_option("--what", o.what, "which set to enumerate")
        ->check(CLI::IsMember({"W", "S", "P"}))
        ->capture_default_str();
    c_enum->add_option("--m", o.m, "level m")->required()->check(rational_ck);
    add_common(c_enum);
    c_enum->callback([&] { rc = cmd_enum(sink(), o); });

    auto* c_gram = add_sub(
        "gram", "contravariant Gram matrix of a Verma weight space");
    c_gram->add_option("--h", o.h, "highest weight h")->required()->check(rational_ck);
    c_gram->add_option("--q", o.q, "highest weight charge q")->required()->check(rational_ck);
    c_gram->add_option("--c", o.c, "central charge c")->required()->check(rational_ck);
    c_gram->add_option("--level", o.level, "weight space level")
        ->required()
        ->check(half_int_ck);
    c_gram->add_option("--charge", o.charge, "weight space charge")->capture_default_str();
    add_common(c_gram);
    c_gram->callback([&] { rc = cmd_gram(sink(), o); });

    auto* c_singular = add_sub(
        "singular", "singular vectors of a Verma weight space");
    c_singular->add_option("--h", o.h, "highest weight h")->required()->check(rational_ck);
    c_singular->add_option("--q", o.q, "highest weight charge q")
        ->required()
        ->check(rational_ck);
    c_singular->add_option("--c", o.c, "central charge c")->required()->check(rational_ck);
    c_singular->add_option("--level", o.level, "weight space level")
        ->required()
        ->check(half_int_ck);
    c_singular->add_option("--charge", o.charge, "weight space charge")->capture_default_str();
    add_common(c_singular);
    c_singular->callback([&] { rc = cmd_singular(sink(), o); });

    auto* c_verify = add_sub("verify", "run a verification suite");
    c_verify->add_option("--suite", o.suite, "which suite to run")
        ->check(CLI::IsMember({"jacobi", "fminus", "ks", "anti-ks", "casimir-identity", "all"}))
        ->capture_default_str();
    c_verify->add_option("--m", o.m, "level m")->check(rational_ck)->capture_default_str();
    c_verify->add_option("--depth", o.depth,
                         "sweep depth (suite specific default; capped by N2VX_MAX_DEPTH)")
        ->check(half_int_ck);
    add_common(c_verify);
    c_verify->callback([&] { rc = cmd_verify(sink(), o); });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const TruncationExceeded& e) {
        err << "n2vx: verification aborted: " << e.what() << "\n";
        return 2;
    } catch (const WindowExceeded& e) {
        err << "n2vx: verification aborted: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "n2vx: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace n2vx::cli
