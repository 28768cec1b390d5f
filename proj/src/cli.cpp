#include "braid3/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <set>

#include <json.hpp>

#include "braid3/analytic.hpp"
#include "braid3/bounds.hpp"
#include "braid3/normal_form.hpp"
#include "braid3/oracles.hpp"

namespace braid3 {

namespace {

using nlohmann::json;

// JSON numbers carry 15 significant digits.
json js_num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return json(std::strtod(buf, nullptr));
}

json js_opt(const std::optional<double>& x) {
    return x ? js_num(*x) : json(nullptr);
}

std::string nt_name(NTClass c) {
    switch (c) {
    case NTClass::CentralPower: return "central_power";
    case NTClass::Periodic: return "periodic";
    case NTClass::Reducible: return "reducible";
    case NTClass::PseudoAnosov: return "pseudo_anosov";
    }
    return "?";
}

json report_json(const BoundsReport& rep) {
    json j;
    j["word"] = rep.word_text;
    j["boundary"] = to_string(rep.boundary);
    j["L"] = js_num(rep.L);
    j["lambda_lower"] = js_num(rep.lambda_lower);
    j["lambda_upper"] = js_num(rep.lambda_upper);
    j["module_lower"] = js_opt(rep.module_lower);
    j["module_upper"] = js_opt(rep.module_upper);
    j["exceptional"] = rep.exceptional ? json(*rep.exceptional) : json(nullptr);
    j["nt_class"] = nt_name(rep.nt);
    if (rep.boundary == Boundary::Conjugacy) {
        j["entropy_lower"] = js_opt(rep.entropy_lower);
        j["entropy_upper"] = js_opt(rep.entropy_upper);
        j["entropy_exact"] = js_opt(rep.entropy_exact);
    }
    return j;
}

void print_report_text(const BoundsReport& rep, std::ostream& out) {
    out << "word:          " << rep.word_text << "\n";
    out << "boundary:      " << to_string(rep.boundary) << "\n";
    out << "L:             " << rep.L << "\n";
    if (rep.exceptional) {
        out << "exceptional:   " << *rep.exceptional << " (Lambda = 0)\n";
    } else {
        out << "Lambda:        [" << rep.lambda_lower << ", " << rep.lambda_upper << "]\n";
    }
    if (rep.entropy_exact) {
        if (rep.entropy_lower)
            out << "entropy:       [" << *rep.entropy_lower << ", " << *rep.entropy_upper
                << "]\n";
        out << "entropy_exact: " << *rep.entropy_exact << "\n";
    }
    out << "nt_class:      " << nt_name(rep.nt) << "\n";
}

std::string normal_form_text(const NormalForm& nf) {
    if (const auto* dp = std::get_if<DeltaPower>(&nf))
        return "d^" + std::to_string(dp->m);
    const auto& s = std::get<Split>(nf);
    std::string t = "s" + std::to_string(s.j) + "^" + std::to_string(s.k);
    if (!s.b1.empty()) t += " . " + render(s.b1) + " (in a1,a2)";
    if (s.ell != 0) t += " . d^" + std::to_string(s.ell);
    return t;
}

int cmd_parse(const CliConfig& cfg, std::ostream& out) {
    json j;
    if (!cfg.word.empty() || cfg.pure_word.empty()) {
        const BraidWord b = parse_braid(cfg.word);
        j["kind"] = "braid";
        j["word"] = render(b);
        j["letters"] = json::array();
        for (const auto& l : b.letters)
            j["letters"].push_back({{"symbol", l.sym == BraidSym::Sigma1   ? "s1"
                                               : l.sym == BraidSym::Sigma2 ? "s2"
                                                                           : "d"},
                                    {"exp", l.exp}});
        if (!cfg.json) {
            out << render(b) << "\n";
            return 0;
        }
    } else {
        const FreeWord w = parse_pure_word(cfg.pure_word);
        j["kind"] = "pure";
        j["word"] = render(w);
        j["total_degree"] = w.total_degree();
        if (!cfg.json) {
            out << render(w) << "\n";
            return 0;
        }
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_normalize(const CliConfig& cfg, std::ostream& out) {
    const BraidWord b = parse_braid(cfg.word);
    const NormalForm nf = normalize(b);
    if (cfg.json) {
        json j;
        j["word"] = render(b);
        if (const auto* dp = std::get_if<DeltaPower>(&nf)) {
            j["delta_power"] = dp->m;
        } else {
            const auto& s = std::get<Split>(nf);
            j["j"] = s.j;
            j["k"] = s.k;
            j["b1"] = render(s.b1);
            j["ell"] = s.ell;
            j["theta_word"] = render(theta(nf));
        }
        j["denormalized"] = render(denormalize(nf));
        out << j.dump(2) << "\n";
    } else {
        out << normal_form_text(nf) << "\n";
        if (std::holds_alternative<Split>(nf))
            out << "theta: " << render(theta(nf)) << "\n";
    }
    return 0;
}

int cmd_syllables(const CliConfig& cfg, std::ostream& out) {
    const FreeWord w = parse_pure_word(cfg.pure_word);
    const SyllableDecomposition dec = syllable_decompose(w);
    if (cfg.json) {
        json j;
        j["word"] = render(w);
        j["L"] = js_num(script_L(dec));
        j["syllables"] = json::array();
        for (const auto& s : dec.syllables) {
            const char* kind = s.kind == SyllableKind::Form1   ? "form1"
                               : s.kind == SyllableKind::Form2 ? "form2"
                                                               : "singleton";
            std::vector<Block> span(w.blocks().begin() + s.first_block,
                                    w.blocks().begin() + s.first_block + s.block_count);
            j["syllables"].push_back(
                {{"kind", kind}, {"degree", s.degree}, {"span", render(free_reduce(span))}});
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& s : dec.syllables) {
            const char* kind = s.kind == SyllableKind::Form1   ? "form1"
                               : s.kind == SyllableKind::Form2 ? "form2"
                                                               : "singleton";
            std::vector<Block> span(w.blocks().begin() + s.first_block,
                                    w.blocks().begin() + s.first_block + s.block_count);
            out << kind << " d=" << s.degree << "  " << render(free_reduce(span)) << "\n";
        }
        out << "L = " << script_L(dec) << "\n";
    }
    return 0;
}

int cmd_bounds(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.word.empty()) {
        const BraidWord b = parse_braid(cfg.word);
        const BoundsReport rep = braid_bounds(b);
        if (cfg.json) {
            json j = report_json(rep);
            const NormalForm nf = normalize(b);
            j["normal_form"] = normal_form_text(nf);
            j["theta_word"] =
                std::holds_alternative<Split>(nf) ? json(render(theta(nf))) : json(nullptr);
            out << j.dump(2) << "\n";
        } else {
            print_report_text(rep, out);
        }
        return 0;
    }
    const FreeWord w = parse_pure_word(cfg.pure_word);
    const auto bc = boundary_from_string(cfg.boundary);
    if (!bc) {
        err << "unknown boundary '" << cfg.boundary << "'\n";
        return 2;
    }
    BoundsReport rep;
    if (*bc == Boundary::TrTr || *bc == Boundary::PbPb)
        rep = word_bounds(w, *bc);
    else if (*bc == Boundary::TrPb || *bc == Boundary::PbTr)
        rep = bounds_mixed(w, *bc);
    else
        rep = class_bounds(cyclic_reduce(w));
    if (cfg.json)
        out << report_json(rep).dump(2) << "\n";
    else
        print_report_text(rep, out);
    return 0;
}

int cmd_entropy(const CliConfig& cfg, std::ostream& out) {
    const FreeWord w = parse_pure_word(cfg.pure_word);
    const BoundsReport rep = class_bounds(cyclic_reduce(w));
    const Verdict v = consistency_check(rep);
    if (cfg.json) {
        json j = report_json(rep);
        j["verdict"] = v == Verdict::Pass ? "PASS" : "FAIL";
        out << j.dump(2) << "\n";
    } else {
        print_report_text(rep, out);
        out << "verdict:       " << (v == Verdict::Pass ? "PASS" : "FAIL") << "\n";
    }
    return v == Verdict::Pass ? 0 : 1;
}

int cmd_enumerate(const CliConfig& cfg, std::ostream& out) {
    const std::vector<CyclicFreeWord> classes = enumerate_words(cfg.max_degree);
    if (!cfg.check) {
        if (cfg.json) {
            json j = json::array();
            for (const auto& cw : classes) j.push_back(render(cw));
            out << j.dump(2) << "\n";
        } else {
            for (const auto& cw : classes) out << render(cw) << "\n";
        }
        return 0;
    }
    std::size_t failures = 0;
    for (const auto& cw : classes) {
        const BoundsReport rep = class_bounds(cw);
        if (consistency_check(rep) != Verdict::Pass) {
            ++failures;
            out << "FAIL " << render(cw) << "\n";
        }
    }
    out << classes.size() << " classes checked, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

void print_audit(const AuditReport& rep, bool as_json, std::ostream& out) {
    if (as_json) {
        json j = json::array();
        for (const auto& l : rep.lines)
            j.push_back({{"name", l.name},
                         {"value", js_num(l.value)},
                         {"bound", js_num(l.bound)},
                         {"margin", js_num(l.margin)},
                         {"pass", l.pass}});
        out << j.dump(2) << "\n";
    } else {
        for (const auto& l : rep.lines)
            out << (l.pass ? "PASS  " : "FAIL  ") << l.name << "  value=" << l.value
                << " bound=" << l.bound << " margin=" << l.margin << "\n";
    }
}

int cmd_audit(const CliConfig& cfg, std::ostream& out) {
    AuditReport all;
    const AuditReport arith = audit_upper_bound_arithmetic();
    const AuditReport vsl = audit_vsl_bounds(5, 12);
    const AuditReport blocks =
        audit_block_constants(2, cfg.m_max, cfg.samples, cfg.seed);
    all.lines = arith.lines;
    all.lines.insert(all.lines.end(), vsl.lines.begin(), vsl.lines.end());
    all.lines.insert(all.lines.end(), blocks.lines.begin(), blocks.lines.end());
    print_audit(all, cfg.json, out);
    if (!cfg.json)
        out << (all.all_pass() ? "all checks PASS" : "some checks FAIL") << "\n";
    return all.all_pass() ? 0 : 1;
}

int cmd_glue(const CliConfig& cfg, std::ostream& out) {
    const FreeWord w = parse_pure_word(cfg.pure_word);
    const GluingAudit a = glue_word(w, cfg.grid_step);
    const bool pass = a.sup_mu < 0.1712;
    if (cfg.json) {
        json j;
        j["word"] = a.word;
        j["grid_step"] = js_num(a.grid_step);
        j["sup_mu"] = js_num(a.sup_mu);
        j["qc_dilatation"] = js_num(a.qc_dilatation);
        j["margin"] = js_num(a.margin);
        j["junctions"] = a.junctions;
        j["samples"] = a.samples;
        j["pass"] = pass;
        out << j.dump(2) << "\n";
    } else {
        out << "word:          " << a.word << "\n"
            << "sup|mu|:       " << a.sup_mu << "\n"
            << "qc dilatation: " << a.qc_dilatation << "\n"
            << "margin:        " << a.margin << " against 0.1712\n"
            << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

} // namespace

std::vector<CyclicFreeWord> enumerate_words(long long max_degree) {
    if (max_degree < 1) throw DomainError("enumerate_words: max_degree >= 1 required");
    std::set<std::vector<Block>> seen;
    std::vector<CyclicFreeWord> out;

    // brute force over unit-letter strings, then rotation-dedup
    const Block letters[4] = {{Gen::A1, 1}, {Gen::A1, -1}, {Gen::A2, 1}, {Gen::A2, -1}};
    std::vector<int> idx;
    for (long long len = 1; len <= max_degree; ++len) {
        idx.assign(len, 0);
        while (true) {
            std::vector<Block> word;
            word.reserve(len);
            bool ok = true;
            for (long long i = 0; i < len && ok; ++i) {
                const Block& l = letters[idx[i]];
                if (!word.empty() && word.back().gen == l.gen &&
                    word.back().exp + l.exp == 0)
                    ok = false; // not reduced
                else if (!word.empty() && word.back().gen == l.gen)
                    word.back().exp += l.exp;
                else
                    word.push_back(l);
            }
            if (ok) {
                const FreeWord w = free_reduce(word);
                // cyclically reduced: no cancellation across the wrap
                const CyclicFreeWord cw(w);
                if (cw.total_degree() == w.total_degree() && !cw.empty() &&
                    seen.insert(cw.blocks()).second)
                    out.push_back(cw);
            }
            long long pos = len - 1;
            while (pos >= 0 && idx[pos] == 3) idx[pos--] = 0;
            if (pos < 0) break;
            ++idx[pos];
        }
    }
    std::sort(out.begin(), out.end(), [](const CyclicFreeWord& a, const CyclicFreeWord& b) {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree();
        return render(a) < render(b);
    });
    return out;
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "parse") return cmd_parse(cfg, out);
        if (cfg.command == "normalize") return cmd_normalize(cfg, out);
        if (cfg.command == "syllables") return cmd_syllables(cfg, out);
        if (cfg.command == "bounds") return cmd_bounds(cfg, out, err);
        if (cfg.command == "entropy") return cmd_entropy(cfg, out);
        if (cfg.command == "enumerate") return cmd_enumerate(cfg, out);
        if (cfg.command == "audit") return cmd_audit(cfg, out);
        if (cfg.command == "glue") return cmd_glue(cfg, out);
        err << "unknown command '" << cfg.command << "'\n";
        return 2;
    } catch (const SyntaxError& e) {
        err << "parse error at offset " << e.offset() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace braid3
