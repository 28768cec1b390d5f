#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braid3/analytic.hpp"
#include "braid3/bounds.hpp"
#include "braid3/cli.hpp"
#include "braid3/normal_form.hpp"
#include "braid3/oracles.hpp"

namespace py = pybind11;
using namespace braid3;

namespace {

py::object opt(const std::optional<double>& x) {
    return x ? py::cast(*x) : py::none();
}

const char* nt_name(NTClass c) {
    switch (c) {
    case NTClass::CentralPower: return "central_power";
    case NTClass::Periodic: return "periodic";
    case NTClass::Reducible: return "reducible";
    case NTClass::PseudoAnosov: return "pseudo_anosov";
    }
    return "?";
}

py::dict report_dict(const BoundsReport& r) {
    py::dict d;
    d["word"] = r.word_text;
    d["boundary"] = to_string(r.boundary);
    d["L"] = r.L;
    d["lambda_lower"] = r.lambda_lower;
    d["lambda_upper"] = r.lambda_upper;
    d["module_lower"] = opt(r.module_lower);
    d["module_upper"] = opt(r.module_upper);
    d["entropy_lower"] = opt(r.entropy_lower);
    d["entropy_upper"] = opt(r.entropy_upper);
    d["entropy_exact"] = opt(r.entropy_exact);
    d["exceptional"] = r.exceptional ? py::cast(*r.exceptional) : py::none();
    d["nt_class"] = nt_name(r.nt);
    return d;
}

py::dict normal_form_dict(const NormalForm& nf) {
    py::dict d;
    if (const auto* dp = std::get_if<DeltaPower>(&nf)) {
        d["delta_power"] = dp->m;
    } else {
        const Split& s = std::get<Split>(nf);
        d["j"] = s.j;
        d["k"] = s.k;
        d["b1"] = render(s.b1);
        d["ell"] = s.ell;
        d["theta_word"] = render(theta(nf));
    }
    d["denormalized"] = render(denormalize(nf));
    return d;
}

py::dict audit_dict(const AuditReport& rep) {
    py::list lines;
    for (const auto& l : rep.lines) {
        py::dict d;
        d["name"] = l.name;
        d["value"] = l.value;
        d["bound"] = l.bound;
        d["margin"] = l.margin;
        d["pass"] = l.pass;
        lines.append(d);
    }
    py::dict out;
    out["lines"] = lines;
    out["all_pass"] = rep.all_pass();
    return out;
}

} // namespace

PYBIND11_MODULE(_braid3, m) {
    m.doc() = "effective extremal length and entropy bounds for 3-braids";

    m.def("reduce_word",
          [](const std::string& text) { return render(parse_pure_word(text)); },
          py::arg("word"), "freely reduce a word in a1, a2");
    m.def("cyclic_reduce",
          [](const std::string& text) {
              return render(cyclic_reduce(parse_pure_word(text)));
          },
          py::arg("word"), "canonical cyclically reduced rotation");

    m.def("syllables", [](const std::string& text) {
        const FreeWord w = parse_pure_word(text);
        const SyllableDecomposition dec = syllable_decompose(w);
        py::list out;
        for (const auto& s : dec.syllables) {
            const char* kind = s.kind == SyllableKind::Form1   ? "form1"
                               : s.kind == SyllableKind::Form2 ? "form2"
                                                               : "singleton";
            out.append(py::make_tuple(kind, s.degree));
        }
        return out;
    });
    m.def("script_L", [](const std::string& text) {
        const FreeWord w = parse_pure_word(text);
        return w.empty() ? 0.0 : script_L(syllable_decompose(w));
    });

    m.def("normal_form",
          [](const std::string& braid) { return normal_form_dict(normalize(parse_braid(braid))); },
          py::arg("braid"));

    m.def("entropy_exact", [](const std::string& word) {
        return entropy_exact(cyclic_reduce(parse_pure_word(word)));
    });
    m.def("braid_entropy_exact",
          [](const std::string& braid) { return entropy_exact(parse_braid(braid)); });
    m.def("braids_equal", [](const std::string& b1, const std::string& b2) {
        return braids_equal(parse_braid(b1), parse_braid(b2));
    });

    m.def("bounds", [](const std::string& word, const std::string& boundary) {
        const FreeWord w = parse_pure_word(word);
        const auto bc = boundary_from_string(boundary);
        if (!bc) throw std::invalid_argument("unknown boundary: " + boundary);
        if (*bc == Boundary::Conjugacy)
            return report_dict(class_bounds(cyclic_reduce(w)));
        if (*bc == Boundary::TrTr || *bc == Boundary::PbPb)
            return report_dict(word_bounds(w, *bc));
        return report_dict(bounds_mixed(w, *bc));
    }, py::arg("word"), py::arg("boundary") = "tr");
    m.def("braid_bounds",
          [](const std::string& braid) { return report_dict(braid_bounds(parse_braid(braid))); });
    m.def("class_check", [](const std::string& word) {
        return consistency_check(class_bounds(cyclic_reduce(parse_pure_word(word)))) ==
               Verdict::Pass;
    });

    m.def("enumerate_words", [](long long max_degree) {
        py::list out;
        for (const auto& cw : enumerate_words(max_degree)) out.append(render(cw));
        return out;
    });

    m.def("ellip_K", &ellip_K, py::arg("k"));
    m.def("slalom_extremal_exact", &slalom_extremal_exact, py::arg("M"));
    m.def("half_slalom_extremal", &half_slalom_extremal, py::arg("M"));
    m.def("slalom_extremal_bounds", [](double M) {
        const SlalomBounds b = slalom_extremal_bounds(M);
        return py::make_tuple(b.lo, b.hi, b.proof_lo, b.proof_hi);
    });

    m.def("glue_word", [](const std::string& word, double grid_step) {
        const GluingAudit a = glue_word(parse_pure_word(word), grid_step);
        py::dict d;
        d["word"] = a.word;
        d["sup_mu"] = a.sup_mu;
        d["qc_dilatation"] = a.qc_dilatation;
        d["margin"] = a.margin;
        d["junctions"] = a.junctions;
        d["samples"] = a.samples;
        return d;
    }, py::arg("word"), py::arg("grid_step") = 1.0 / 360);

    m.def("audit_upper_bound_arithmetic",
          []() { return audit_dict(audit_upper_bound_arithmetic()); });
    m.def("audit_vsl_bounds", [](long long d_lo, long long d_hi) {
        return audit_dict(audit_vsl_bounds(d_lo, d_hi));
    }, py::arg("d_lo") = 5, py::arg("d_hi") = 12);
    m.def("audit_block_constants", [](int m_lo, int m_hi, int samples, std::uint64_t seed) {
        return audit_dict(audit_block_constants(m_lo, m_hi, samples, seed));
    }, py::arg("m_lo") = 2, py::arg("m_hi") = 5, py::arg("samples") = 2000,
       py::arg("seed") = 20240809);
}
