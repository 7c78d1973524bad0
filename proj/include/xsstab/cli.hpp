// Copyright 2026 The xsstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef XSSTAB_CLI_HPP
#define XSSTAB_CLI_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xsstab/xsstab.hpp"

namespace xsstab::cli {

enum ExitCode : int { kOk = 0, kNo = 1, kMalformed = 2, kDenseLimit = 3 };

/// Collects text lines and a JSON object; one of them is printed at the end.
struct Report {
    std::vector<std::string> lines;
    nlohmann::ordered_json json = nlohmann::ordered_json::object();

    void line(std::string s) {
        lines.push_back(std::move(s));
    }
};

inline GeneratingSet load_generators(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open " + path);
    }
    return read_generating_set(in);
}

inline std::vector<std::array<size_t, 3>> load_clauses(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open " + path);
    }
    return read_clauses(in);
}

/// Parses "1,2,4" into 0-based indices below n.
inline std::vector<size_t> parse_cut(const std::string &text, size_t n) {
    std::vector<size_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError(0, "bad qubit list: " + text);
        }
        size_t q = std::stoul(tok);
        if (q == 0 || q > n) {
            throw ParseError(0, "qubit " + tok + " out of range 1.." + std::to_string(n));
        }
        out.push_back(q - 1);
    }
    if (out.empty()) {
        throw ParseError(0, "empty qubit list");
    }
    return out;
}

inline std::string join_one_based(const std::vector<size_t> &v, const char *sep) {
    std::string s;
    for (size_t k = 0; k < v.size(); k++) {
        s += (k ? sep : "") + std::to_string(v[k] + 1);
    }
    return s;
}

inline std::string format_real(double v) {
    if (std::abs(v) < 1e-12) {
        v = 0;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string format_complex(std::complex<double> v) {
    double re = std::abs(v.real()) < 1e-12 ? 0 : v.real();
    double im = std::abs(v.imag()) < 1e-12 ? 0 : v.imag();
    if (im == 0) {
        return format_real(re);
    }
    std::string s = re == 0 ? "" : format_real(re);
    if (im > 0 && !s.empty()) {
        s += "+";
    }
    return s + format_real(im) + "i";
}

inline BasisState pick_basis_state(const GeneratingSet &S, size_t mu) {
    auto cs = std::make_shared<const CodeStructure>(analyze(S));
    if (mu >= cs->d) {
        throw ParseError(0, "--mu " + std::to_string(mu) + " out of range: the code has d=" + std::to_string(cs->d));
    }
    return basis_state(cs, mu);
}

inline int cmd_check(const GeneratingSet &S, Report &r) {
    AdmissibilityResult adm = is_admissible(S);
    r.json["n"] = S.n;
    r.json["admissible"] = adm.admissible;
    if (adm) {
        r.line("admissible yes");
        bool reg = is_regular(S);
        r.line(std::string("regular ") + (reg ? "yes" : "no"));
        r.json["regular"] = reg;
    } else {
        r.line("admissible no (condition " + std::to_string(adm.violated_condition) + ")");
        r.json["violated_condition"] = adm.violated_condition;
    }
    ExistenceResult ex = decide_existence(S);
    r.json["exists"] = ex.exists;
    if (!ex) {
        r.line("NO (no stabilized state)");
        return kNo;
    }
    r.line("YES (witness " + ex.witness.str() + ")");
    r.json["witness"] = ex.witness.str();
    return kOk;
}

inline int cmd_normal_form(const GeneratingSet &S, Report &r) {
    if (!decide_existence(S)) {
        r.line("NO (no stabilized state)");
        return kNo;
    }
    NormalForm nf = normal_form(S);
    r.line("t=" + std::to_string(nf.t));
    r.line("perm=" + join_one_based(nf.perm, " "));
    std::vector<std::string> W;
    for (size_t i = 0; i < nf.W.num_rows(); i++) {
        W.push_back(nf.W.row(i).str());
        r.line("W " + W.back());
    }
    std::istringstream gens(format_generating_set(nf.gens));
    for (std::string l; std::getline(gens, l);) {
        r.line(l);
    }
    r.json["t"] = nf.t;
    r.json["perm"] = nf.perm;
    r.json["W"] = W;
    std::vector<std::string> g;
    for (const auto &x : nf.gens.gens) {
        g.push_back(x.str());
    }
    r.json["generators"] = g;
    return kOk;
}

inline int cmd_basis(const GeneratingSet &S, Report &r) {
    CodeStructure cs = analyze(S);
    std::string head = "t=" + std::to_string(cs.t) + " d=" + std::to_string(cs.d);
    if (cs.d > 0) {
        head += " f=" + extract_phase(cs, cs.mu_list[0]).str();
    }
    r.line(head);
    r.line("perm=" + join_one_based(cs.perm, " "));
    std::vector<std::string> W, mus;
    for (size_t i = 0; i < cs.W.num_rows(); i++) {
        W.push_back(cs.W.row(i).str());
        r.line("W " + W.back());
    }
    for (size_t k = 0; k < cs.d; k++) {
        mus.push_back(cs.mu_list[k].str());
        r.line("mu " + std::to_string(k) + " " + mus.back() + " lambda=" + cs.lambda_list[k].str());
    }
    r.json["t"] = cs.t;
    r.json["d"] = cs.d;
    r.json["regular"] = cs.regular;
    r.json["perm"] = cs.perm;
    r.json["W"] = W;
    r.json["mu"] = mus;
    return kOk;
}

inline int cmd_degeneracy(const GeneratingSet &S, Report &r) {
    CodeStructure cs = analyze(S);
    r.line(std::to_string(cs.d));
    r.json["d"] = cs.d;
    return kOk;
}

inline int cmd_amplitudes(const GeneratingSet &S, size_t mu, Report &r) {
    BasisState psi = pick_basis_state(S, mu);
    r.line(psi.f.str());
    r.json["t"] = psi.t();
    r.json["mu"] = psi.mu.str();
    r.json["f"] = psi.f.str();
    auto terms = nlohmann::ordered_json::array();
    for (const auto &[m, c] : psi.f.terms()) {
        terms.push_back({{"monomial", m.str()}, {"coefficient", c}});
    }
    r.json["terms"] = terms;
    return kOk;
}

inline int cmd_entropy(const GeneratingSet &S, size_t mu, const std::string &cut, Report &r) {
    BasisState psi = pick_basis_state(S, mu);
    Bipartition bp(S.n, parse_cut(cut, S.n));
    size_t e = entropy(psi, bp);
    r.line(std::to_string(e));
    r.json["cut"] = join_one_based(bp.A, ",");
    r.json["entropy"] = e;
    return kOk;
}

inline int cmd_profile(const GeneratingSet &S, size_t mu, size_t max_size, Report &r) {
    BasisState psi = pick_basis_state(S, mu);
    if (max_size == 0) {
        max_size = S.n / 2;
    }
    auto prof = schmidt_profile(psi, max_size);
    auto arr = nlohmann::ordered_json::array();
    for (const auto &[A, e] : prof) {
        r.line(join_one_based(A, ",") + " " + std::to_string(e));
        arr.push_back({{"cut", join_one_based(A, ",")}, {"entropy", e}});
    }
    r.json["profile"] = arr;
    return kOk;
}

inline int cmd_circuit(const GeneratingSet &S, size_t mu, const std::string &out_path, Report &r) {
    BasisState psi = pick_basis_state(S, mu);
    Circuit c = synthesize(psi);
    std::string text = c.str();
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            throw ParseError(0, "cannot write " + out_path);
        }
        f << text;
        r.line("wrote " + std::to_string(c.gates.size()) + " gates to " + out_path);
    } else {
        std::istringstream in(text);
        for (std::string l; std::getline(in, l);) {
            r.line(l);
        }
    }
    std::vector<std::string> gates;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        gates.push_back(l);
    }
    r.json["n"] = c.n;
    r.json["gates"] = gates;
    return kOk;
}

inline int cmd_expect(const GeneratingSet &S, size_t mu, const std::string &pauli, Report &r) {
    BasisState psi = pick_basis_state(S, mu);
    Pauli p = parse_pauli(pauli);
    if (p.num_qubits() != S.n) {
        throw ParseError(0, "Pauli acts on " + std::to_string(p.num_qubits()) + " qubits, expected " +
                                std::to_string(S.n));
    }
    std::complex<double> v = expectation(psi, p);
    r.line(format_complex(v));
    r.json["re"] = std::abs(v.real()) < 1e-12 ? 0.0 : v.real();
    r.json["im"] = std::abs(v.imag()) < 1e-12 ? 0.0 : v.imag();
    return kOk;
}

inline int cmd_hamiltonian(const GeneratingSet &S, bool local, Report &r) {
    HamiltonianSpec H = local ? build_local(S) : build(S);
    std::vector<std::string> terms;
    for (const auto &t : H.terms) {
        terms.push_back(t.str());
        r.line(terms.back());
    }
    r.json["n"] = H.n;
    r.json["gauge_terms"] = H.num_gauge_terms();
    r.json["terms"] = terms;
    if (H.locality_radius) {
        r.json["locality_radius"] = *H.locality_radius;
    }
    return kOk;
}

inline int cmd_logical(const GeneratingSet &S, Report &r) {
    CodeStructure cs = analyze(S);
    auto ops = logical_operators(cs);
    r.line("k=" + std::to_string(ops.size()));
    auto arr = nlohmann::ordered_json::array();
    for (size_t k = 0; k < ops.size(); k++) {
        const auto &p = ops[k];
        std::string z = std::string(p.zbar.sign ? "-" : "+") + p.zbar.zmask.str();
        r.line("Z" + std::to_string(k + 1) + " " + z);
        r.line("X" + std::to_string(k + 1) + " x=" + p.xbar.xmask.str() + " correction=" + p.xbar.correction.str());
        arr.push_back({{"z", z}, {"x", p.xbar.xmask.str()}, {"correction", p.xbar.correction.str()}});
    }
    r.json["logical"] = arr;
    return kOk;
}

inline void emit_generators(const GeneratingSet &S, Report &r) {
    std::istringstream in(format_generating_set(S));
    for (std::string l; std::getline(in, l);) {
        r.line(l);
    }
    std::vector<std::string> g;
    for (const auto &x : S.gens) {
        g.push_back(x.str());
    }
    r.json["n"] = S.n;
    r.json["generators"] = g;
}

/// Dense cross-check of every symbolic output; returns kNo on any mismatch.
inline int cmd_oracle_verify(const GeneratingSet &S, size_t limit, Report &r) {
    check_dense_limit(S.n, limit);
    bool ok = true;
    auto record = [&](const std::string &name, bool pass, const std::string &detail) {
        r.line(std::string(pass ? "ok   " : "FAIL ") + name + " " + detail);
        r.json["checks"].push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
        ok = ok && pass;
    };
    r.json["checks"] = nlohmann::ordered_json::array();
    auto dense = fixed_space(S, limit);
    ExistenceResult ex = decide_existence(S);
    record("existence", ex.exists == !dense.empty(),
           std::string("symbolic=") + (ex.exists ? "yes" : "no") + " dense=" + (dense.empty() ? "no" : "yes"));
    if (ex) {
        auto cs = std::make_shared<const CodeStructure>(analyze(S));
        record("degeneracy", cs->d == dense.size(),
               "symbolic=" + std::to_string(cs->d) + " dense=" + std::to_string(dense.size()));
        for (size_t k = 0; k < cs->d; k++) {
            BasisState psi = basis_state(cs, k);
            DenseState v = dense_state(psi, limit);
            std::string tag = "mu=" + std::to_string(k);
            record("stabilized", is_stabilized(S, v), tag);
            double ov = overlap(simulate(synthesize(psi), limit), v);
            record("circuit", std::abs(ov - 1) < 1e-9, tag + " overlap=" + format_real(ov));
            double worst = 0;
            for (size_t q = 0; q + 1 < S.n; q++) {
                Bipartition bp(S.n, {q});
                worst = std::max(worst, std::abs(double(entropy(psi, bp)) - entropy_dense(v, bp.A)));
            }
            record("entropy", worst < 1e-9, tag + " max_error=" + format_real(worst));
        }
        if (S.n <= std::min<size_t>(limit, 12) && cs->regular) {
            HamiltonianCheck hc = check_hamiltonian(build(S), limit);
            record("hamiltonian", hc.max_commutator < 1e-10 && hc.ground_dimension == cs->d,
                   "commutator=" + format_real(hc.max_commutator) + " ground=" + std::to_string(hc.ground_dimension));
        }
    }
    r.json["pass"] = ok;
    return ok ? kOk : kNo;
}

/// Runs the command line; output goes to `out`, diagnostics to `err`. Returns the exit code.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"XS-stabilizer toolkit", "xs-stab"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Print JSON instead of text");

    std::string file, cut, pauli, out_path, clause_file;
    size_t mu = 0, max_size = 0, limit = kDefaultDenseLimit;
    bool local = false;

    auto *check = app.add_subcommand("check", "Admissibility, regularity and existence verdicts");
    auto *nform = app.add_subcommand("normal-form", "Generators in normal form");
    auto *basis = app.add_subcommand("basis", "Support structure and coset labels");
    auto *degen = app.add_subcommand("degeneracy", "Dimension of the stabilized space");
    auto *ampl = app.add_subcommand("amplitudes", "Phase polynomial of one basis state");
    auto *ent = app.add_subcommand("entropy", "Entanglement entropy of a bipartition in bits");
    auto *prof = app.add_subcommand("profile", "Entropy of every small subset");
    auto *circ = app.add_subcommand("circuit", "Preparation circuit for one basis state");
    auto *expect = app.add_subcommand("expect", "Expectation value of a Pauli operator");
    auto *ham = app.add_subcommand("hamiltonian", "Commuting projector Hamiltonian terms");
    auto *logical = app.add_subcommand("logical", "Logical Z and X operators");
    auto *verify = app.add_subcommand("oracle-verify", "Cross-check symbolic results densely");
    for (auto *c : {check, nform, basis, degen, ampl, ent, prof, circ, expect, ham, logical, verify}) {
        c->add_option("file", file, "Generator file")->required();
    }
    for (auto *c : {ampl, ent, prof, circ, expect}) {
        c->add_option("--mu", mu, "Basis state index (0-based)");
    }
    ent->add_option("--cut", cut, "Qubits of one side, 1-based, comma separated")->required();
    prof->add_option("--max-size", max_size, "Largest subset size (default n/2)");
    circ->add_option("--out", out_path, "Write the circuit to this file");
    expect->add_option("--pauli", pauli, "Pauli as \"s=<0..3> x=<bits> z=<bits>\"")->required();
    ham->add_flag("--local", local, "Guard each term with neighbouring generators only");
    verify->add_option("--limit", limit, "Largest qubit count for dense checks");

    auto *model = app.add_subcommand("model", "Emit a built-in generating set");
    model->require_subcommand(1);
    size_t lx = 2, ly = 2, k = 1;
    bool torus = false, open = false, pauli_variant = false;
    std::vector<std::string> cocycles;
    auto *semion = model->add_subcommand("semion", "Doubled semion model");
    auto *tqdc = model->add_subcommand("tqd", "Twisted quantum double with Z2^k");
    for (auto *c : {semion, tqdc}) {
        c->add_option("--lx", lx, "Cells along e1")->check(CLI::Range(2, 64));
        c->add_option("--ly", ly, "Cells along e2")->check(CLI::Range(2, 64));
        auto *t = c->add_flag("--torus", torus, "Periodic boundary (default)");
        auto *o = c->add_flag("--open", open, "Open patch");
        t->excludes(o);
    }
    tqdc->add_option("--k", k, "Number of Z2 layers")->check(CLI::Range(1, 8));
    tqdc->add_option("--cocycle", cocycles, "Cocycle generators such as 1, 12 or 123")->required();
    auto *rm = model->add_subcommand("rm15", "15-qubit Reed-Muller code");
    rm->add_flag("--pauli", pauli_variant, "Emit the Pauli variant");
    auto *six = model->add_subcommand("six-qubit", "Six-qubit example state");

    auto *sat = app.add_subcommand("sat", "Positive 1-in-3-SAT utilities");
    sat->require_subcommand(1);
    auto *encode = sat->add_subcommand("encode", "Encode a clause file as generators");
    size_t num_vars = 0;
    encode->add_option("clauses", clause_file, "Clause file, one 1-based triple per line")->required();
    encode->add_option("--vars", num_vars, "Variable count (default: largest index)");

    std::vector<std::string> argv_s = {"xs-stab"};
    argv_s.insert(argv_s.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : argv_s) {
        argv.push_back(s.data());
    }
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kMalformed;
    }

    Report r;
    int code = kOk;
    try {
        auto gens = [&] { return load_generators(file); };
        if (check->parsed()) {
            code = cmd_check(gens(), r);
        } else if (nform->parsed()) {
            code = cmd_normal_form(gens(), r);
        } else if (basis->parsed()) {
            code = cmd_basis(gens(), r);
        } else if (degen->parsed()) {
            code = cmd_degeneracy(gens(), r);
        } else if (ampl->parsed()) {
            code = cmd_amplitudes(gens(), mu, r);
        } else if (ent->parsed()) {
            code = cmd_entropy(gens(), mu, cut, r);
        } else if (prof->parsed()) {
            code = cmd_profile(gens(), mu, max_size, r);
        } else if (circ->parsed()) {
            code = cmd_circuit(gens(), mu, out_path, r);
        } else if (expect->parsed()) {
            code = cmd_expect(gens(), mu, pauli, r);
        } else if (ham->parsed()) {
            code = cmd_hamiltonian(gens(), local, r);
        } else if (logical->parsed()) {
            code = cmd_logical(gens(), r);
        } else if (verify->parsed()) {
            code = cmd_oracle_verify(gens(), limit, r);
        } else if (semion->parsed()) {
            emit_generators(doubled_semion(lx, ly, open ? Boundary::Open : Boundary::Torus).gens, r);
        } else if (tqdc->parsed()) {
            LatticeSpec spec{lx, ly, open ? Boundary::Open : Boundary::Torus, k, {}};
            for (const auto &c : cocycles) {
                spec.cocycle.push_back(CocycleTerm::parse(c.rfind("w", 0) == 0 ? c : "w" + c));
            }
            emit_generators(tqd(spec).gens, r);
        } else if (rm->parsed()) {
            auto codes = reed_muller_15();
            emit_generators(pauli_variant ? codes.pauli : codes.xs, r);
        } else if (six->parsed()) {
            emit_generators(six_qubit(), r);
        } else if (encode->parsed()) {
            auto clauses = load_clauses(clause_file);
            size_t need = 0;
            for (const auto &c : clauses) {
                need = std::max({need, c[0] + 1, c[1] + 1, c[2] + 1});
            }
            if (num_vars == 0) {
                num_vars = need;
            }
            if (num_vars < need || num_vars == 0) {
                throw ParseError(0, "clauses need at least " + std::to_string(std::max<size_t>(need, 1)) +
                                        " variables");
            }
            emit_generators(sat_encode(num_vars, clauses), r);
        }
    } catch (const NoStabilizedState &) {
        r.lines = {"NO (no stabilized state)"};
        r.json = {{"exists", false}};
        code = kNo;
    } catch (const DenseLimitExceeded &e) {
        err << "error: " << e.what() << "\n";
        return kDenseLimit;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kMalformed;
    }
    if (json) {
        r.json["exit_code"] = code;
        out << r.json.dump(2) << "\n";
    } else {
        for (const auto &l : r.lines) {
            out << l << "\n";
        }
    }
    return code;
}

}  // namespace xsstab::cli

#endif
