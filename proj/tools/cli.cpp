#include "cli.hpp"

#include "liecomp/bounds.hpp"
#include "liecomp/error.hpp"
#include "liecomp/lie_structure.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>

namespace liecomp::cli {

std::string emit_report(const Report& report, OutputFormat format) {
    if (report.empty())
        return "";
    if (format == OutputFormat::json)
        return report.document().dump(2) + "\n";
    std::string out;
    for (const auto& l : report.lines())
        out += l + "\n";
    return out;
}

namespace {

struct Config {
    std::uint64_t seed = 0;
    std::size_t samples = 20;
    std::string output = "text";
    std::size_t max_degree = kDefaultMaxDegree;

    std::string file, twist, field_file, minpoly, ideal, write, vector;
    std::string kind = "both";
    std::string mode = "structural";
    std::optional<std::size_t> index, bound;
    std::size_t n = 0, m = 0;
    bool note = false;
};

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string matrix_text(const Matrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += (j ? ", " : "") + m(i, j).str();
        s += "]";
    }
    return s + "]";
}

Json vectors_json(const std::vector<Vector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs)
        a.push_back(to_json(v));
    return a;
}

std::string vectors_text(const std::vector<Vector>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i)
        s += (i ? ", " : "") + to_string(vs[i]);
    return "[" + s + "]";
}

LieAlgebra load_algebra(const Config& c) { return algebra_from_json(read_json_file(c.file), c.max_degree); }

NumberField load_field(const Config& c) {
    if (!c.minpoly.empty()) {
        const Polynomial p = parse_coefficient_list(c.minpoly);
        if (p.degree() < 1 || !p.is_monic())
            throw EncodingError("--minpoly must be monic of degree at least 1");
        if (p == Polynomial{0, 1})
            return NumberField::rationals();
        return NumberField(p, c.max_degree);
    }
    if (!c.field_file.empty())
        return field_from_json(read_json_file(c.field_file), c.max_degree);
    throw EncodingError("a scalar field is needed: pass --minpoly or --field");
}

Subspace load_ideal(const Config& c, const NumberField& field, std::size_t n) {
    if (c.ideal.empty())
        return Subspace(field, n);
    Json j = read_json_file(c.ideal);
    if (j.is_object() && j.contains("N_basis"))
        j = Json(j.at("N_basis"));
    if (!j.is_array())
        throw EncodingError("ideal file must be an array of vectors or contain N_basis");
    std::vector<Vector> vecs;
    for (const auto& v : j)
        vecs.push_back(vector_from_json(v, field, n));
    return Subspace::span(field, n, vecs);
}

void field_header(Report& r, const NumberField& field) {
    r.field("field", field.describe());
    r.line("field: " + field.describe());
}

Completion build_completion(const Config& c) {
    const LieAlgebra l = load_algebra(c);
    if (!c.twist.empty())
        return twisted_completion(l, twist_from_json(read_json_file(c.twist), l));
    const NumberField field = load_field(c);
    return quotient_completion(tensor_product(field, l), load_ideal(c, field, l.dim()));
}

void series_entry(Report& r, const std::string& prefix, const SeriesReport& s) {
    const bool lower = s.kind == SeriesKind::lower_central;
    const std::string label = lower ? "class" : "length";
    const std::string value = s.class_or_length ? std::to_string(*s.class_or_length)
                                                : (lower ? "not nilpotent" : "not solvable");
    Json j{{"dims", s.dims}};
    if (s.class_or_length)
        j[label] = *s.class_or_length;
    else
        j[label] = value;
    r.field(prefix.empty() ? to_string(s.kind) : prefix + "_" + to_string(s.kind), j);
    r.line((prefix.empty() ? "" : prefix + " ") + to_string(s.kind) + " dims: " + join(s.dims) + " " + label + ": " +
           value);
}

void cmd_validate(const Config& c, Report& r) {
    const LieAlgebra l = load_algebra(c);
    const ValidationResult v = validate(l);
    const auto& names = l.basis_names();
    r.field("ok", v.ok);
    r.field("triples_checked", v.triples_checked);
    if (v.alternating_witness) {
        const auto [i, j] = *v.alternating_witness;
        r.field("alternating_witness", {names[i], names[j]});
        r.line("alternating law FAILS at (" + names[i] + ", " + names[j] + ")");
    } else if (v.jacobi_witness) {
        const auto [i, j, k] = *v.jacobi_witness;
        r.field("jacobi_witness", {names[i], names[j], names[k]});
        r.line("Jacobi FAILS at (" + names[i] + ", " + names[j] + ", " + names[k] + ")");
    } else {
        r.line("Jacobi OK (" + std::to_string(v.triples_checked) + (v.triples_checked == 1 ? " triple" : " triples") +
               " checked)");
    }
    if (!v.ok)
        r.fail();
}

void cmd_series(const Config& c, Report& r) {
    const LieAlgebra l = load_algebra(c);
    if (c.kind == "lower_central" || c.kind == "both")
        series_entry(r, "", series(l, SeriesKind::lower_central));
    if (c.kind == "derived" || c.kind == "both")
        series_entry(r, "", series(l, SeriesKind::derived));
}

void cmd_centroid(const Config& c, Report& r) {
    const LieAlgebra l = load_algebra(c);
    const CentroidReport cr = centroid(l, c.seed, c.samples);
    field_header(r, l.field());
    r.field("dim", cr.dim());
    r.line("centroid dim: " + std::to_string(cr.dim()));
    const std::pair<const char*, bool> flags[] = {{"contains_identity", cr.contains_identity},
                                                  {"closed_under_multiplication", cr.closed_under_multiplication},
                                                  {"commutative", cr.commutative},
                                                  {"every_nonzero_invertible", cr.every_nonzero_invertible},
                                                  {"is_field", cr.is_field()}};
    for (const auto& [key, value] : flags) {
        r.field(key, value);
        std::string label = key;
        std::replace(label.begin(), label.end(), '_', ' ');
        r.line(label + ": " + yes_no(value));
    }
    Json basis = Json::array();
    for (std::size_t i = 0; i < cr.basis.size(); ++i) {
        basis.push_back(to_json(cr.basis[i]));
        r.line("basis " + std::to_string(i) + ": " + matrix_text(cr.basis[i]));
    }
    r.field("basis", basis);
    if (!cr.contains_identity)
        r.fail();
}

void subspace_entry(Report& r, const std::string& name, const Subspace& s) {
    r.field(name + "_dim", s.dim());
    r.field("basis", vectors_json(s.basis_vectors()));
    r.line(name + " dim: " + std::to_string(s.dim()));
    r.line("basis: " + vectors_text(s.basis_vectors()));
}

void cmd_centralizer(const Config& c, Report& r) {
    const LieAlgebra l = load_algebra(c);
    Vector x;
    if (c.index) {
        if (*c.index >= l.dim())
            throw EncodingError("--index out of range");
        x = l.basis_vector(*c.index);
    } else if (!c.vector.empty()) {
        try {
            x = vector_from_json(Json::parse(c.vector), l.field(), l.dim());
        } catch (const Json::exception& e) {
            throw ParseError(std::string("--vector: ") + e.what());
        }
    } else {
        throw EncodingError("pass --index or --vector");
    }
    field_header(r, l.field());
    r.field("x", to_json(x));
    r.line("x: " + to_string(x));
    subspace_entry(r, "centralizer", centralizer(l, x));
}

void cmd_center(const Config& c, Report& r) {
    const LieAlgebra l = load_algebra(c);
    field_header(r, l.field());
    subspace_entry(r, "center", center(l));
}

void cmd_tensor(const Config& c, Report& r) {
    const LieAlgebra l = load_algebra(c);
    const NumberField field = load_field(c);
    const TensorAlgebra t = tensor_product(field, l);
    field_header(r, field);
    const std::size_t restricted = t.algebra.dim() * field.degree();
    r.field("dim_Q_L", l.dim());
    r.field("dim_E_tensor", t.algebra.dim());
    r.field("dim_Q_tensor", restricted);
    r.field("dim_Q_one_tensor_L", t.one_tensor_L.dim());
    r.line("dim_Q L = " + std::to_string(l.dim()));
    r.line("dim_E (E (x) L) = " + std::to_string(t.algebra.dim()));
    r.line("dim_Q (E (x) L) = " + std::to_string(restricted));
    r.line("dim_Q (1 (x) L) = " + std::to_string(t.one_tensor_L.dim()));
    const bool ok = t.algebra.dim() == l.dim() && t.one_tensor_L.dim() == l.dim() && validate(t.algebra).ok;
    r.field("base_change_identity", ok);
    r.line(std::string("base change identity: ") + (ok ? "OK" : "FAILS"));
    if (!ok)
        r.fail();
}

void cmd_entangled(const Config& c, Report& r) {
    const LieAlgebra l = load_algebra(c);
    const NumberField field = load_field(c);
    const TensorAlgebra t = tensor_product(field, l);
    const Subspace N = load_ideal(c, field, l.dim());
    const EntanglementReport e = is_entangled(t, N);
    field_header(r, field);
    r.field("dim_E_N", N.dim());
    r.field("entangled", e.entangled);
    r.line("dim_E N = " + std::to_string(N.dim()));
    if (e.entangled) {
        r.line("entangled: yes");
    } else {
        r.field("witness", to_json(*e.witness));
        r.line("entangled: no witness=1 (x) " + to_string(*e.witness));
        r.fail();
    }
}

void completion_entries(Report& r, const Completion& comp) {
    field_header(r, comp.tensor.field);
    r.field("dim_Q_L", comp.tensor.source.dim());
    r.field("dim_E_tensor", comp.tensor.algebra.dim());
    r.field("dim_E_N", comp.N.dim());
    r.field("dim_E_K", comp.K.dim());
    r.line("dim_Q L = " + std::to_string(comp.tensor.source.dim()));
    r.line("dim_E (E (x) L) = " + std::to_string(comp.tensor.algebra.dim()));
    r.line("dim_E N = " + std::to_string(comp.N.dim()));
    r.line("dim_E K = " + std::to_string(comp.K.dim()));
}

void cmd_complete(const Config& c, Report& r) {
    const Completion comp = build_completion(c);
    completion_entries(r, comp);
    r.line("embedding injective: yes");
    r.line("K = Span_E(L): yes");
    if (!c.write.empty()) {
        std::ofstream out(c.write);
        if (!out)
            throw ParseError("cannot write '" + c.write + "'");
        out << to_json(comp).dump(2) << "\n";
        r.field("written", c.write);
        r.line("written: " + c.write);
    }
}

void cmd_verify_action(const Config& c, Report& r) {
    if (c.twist.empty())
        throw EncodingError("verify-action needs --twist");
    const LieAlgebra l = load_algebra(c);
    const TwistData t = twist_from_json(read_json_file(c.twist), l);
    const ScalarActionReport s = verify_scalar_action(l, t, c.seed);
    field_header(r, l.field());
    r.field("checks", s.checks.size());
    r.field("surjective", s.surjective);
    r.field("ok", s.ok);
    if (s.first_failure) {
        const ScalarActionCheck& f = s.checks[*s.first_failure];
        r.field("witness", Json{{"basis_index", f.basis_index},
                                {"x", to_json(f.scalar)},
                                {"lhs", to_json(f.lhs)},
                                {"rhs", to_json(f.rhs)}});
        r.line("scalar action FAILS witness=(basis " + std::to_string(f.basis_index) + "; x = " + f.scalar.str() +
               "; lhs = " + to_string(f.lhs) + "; rhs = " + to_string(f.rhs) + ")");
    } else {
        r.line("scalar action OK (" + std::to_string(s.checks.size()) + " checks)");
    }
    r.line("every coset is a-bar: " + yes_no(s.surjective));
    if (!s.ok)
        r.fail();
}

void cmd_preserve(const Config& c, Report& r) {
    const Completion comp = build_completion(c);
    const PreservationReport p = preservation_check(comp);
    field_header(r, comp.tensor.field);
    series_entry(r, "L", p.source_lower);
    series_entry(r, "K", p.quotient_lower);
    series_entry(r, "L", p.source_derived);
    series_entry(r, "K", p.quotient_derived);
    r.field("class_equal", p.class_equal);
    r.field("length_equal", p.length_equal);
    r.field("images_equal", p.images_equal);
    r.line("class equal: " + yes_no(p.class_equal));
    r.line("derived length equal: " + yes_no(p.length_equal));
    r.line("terms equal images of E (x) terms of L: " + yes_no(p.images_equal));
    if (p.failure) {
        r.field("failure", *p.failure);
        r.line("FAILS: " + *p.failure);
    }
    if (!p.ok())
        r.fail();
}

void cmd_prop1(const Config& c, Report& r) {
    std::optional<Polynomial> q;
    if (!c.minpoly.empty())
        q = parse_coefficient_list(c.minpoly);
    const Prop1Result p = prop1_construct(c.n, q, c.seed, c.samples, c.max_degree);
    r.field("field", p.field.describe());
    r.field("companion", to_json(p.companion));
    r.field("minpoly_vanishes", p.minpoly_vanishes);
    r.field("vectors_checked", p.vectors_checked);
    r.field("one_dimensional", p.one_dimensional);
    r.line("E = " + p.field.describe());
    r.line("action(t) = " + matrix_text(p.companion));
    r.line("q(action(t)) = 0: " + yes_no(p.minpoly_vanishes));
    r.line("dim_E = 1: " + yes_no(p.one_dimensional) + " (" + std::to_string(p.vectors_checked) + " vectors checked)");
    if (!p.minpoly_vanishes || !p.one_dimensional)
        r.fail();
}

void cmd_bound(const Config& c, Report& r) {
    const LieAlgebra l = load_algebra(c);
    const DegreeBoundReport b = degree_bound(l, c.seed, c.samples);
    field_header(r, l.field());
    r.field("degree", b.degree);
    r.field("basis_dims", b.basis_dims);
    r.field("sample_dims", b.sample_dims);
    r.field("upper_bound", b.upper_bound);
    r.line("[E:Q] = " + std::to_string(b.degree));
    r.line("basis dims: " + join(b.basis_dims));
    r.line("sample dims: " + join(b.sample_dims));
    r.line("min observed dim_Q C(x) = " + std::to_string(b.upper_bound) + " (upper bound on the true minimum)");
    r.line("[E:Q] <= every observed dim_Q C(x): yes");
}

void cmd_potential(const Config& c, Report& r) {
    const PotentialReport p = potential_dim_check(c.n, c.m, c.bound);
    r.field("feasible", p.feasible);
    if (p.degree)
        r.field("degree", *p.degree);
    r.field("explanation", p.explanation);
    r.line(p.explanation);
    if (!p.feasible)
        r.fail();
}

void cmd_axioms(const Config& c, Report& r) {
    if (c.file.empty()) {
        if (!c.note)
            throw EncodingError("axioms needs a structure file unless --note is given");
        r.field("note", counterexample_note());
        r.line(counterexample_note());
        return;
    }
    const TwoSortedStructure m = structure_from_json(read_json_file(c.file), c.max_degree);
    const CheckMode mode = c.mode == "sampled" ? CheckMode::sampled : CheckMode::structural;
    const auto verdicts = check_axioms(m, mode, c.samples, c.seed);
    Json arr = Json::array();
    for (const auto& v : verdicts) {
        Json j{{"id", v.axiom_id}, {"verdict", v.passed ? "PASS" : "FAIL"}};
        std::string line = "AXIOM " + std::to_string(v.axiom_id) + (v.passed ? " PASS" : " FAIL");
        if (v.witness) {
            j["witness"] = to_string(*v.witness);
            line += " witness=" + to_string(*v.witness);
            r.fail();
        }
        arr.push_back(j);
        r.line(line);
    }
    r.field("mode", to_string(mode));
    r.field("axioms", arr);
    if (c.note) {
        r.field("note", counterexample_note());
        r.line(counterexample_note());
    }
}

std::size_t env_max_degree() {
    const char* env = std::getenv("LIECOMP_MAX_DEGREE");
    if (!env || !*env)
        return kDefaultMaxDegree;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0)
        throw ParseError("LIECOMP_MAX_DEGREE must be a positive integer");
    return v;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    try {
        c.max_degree = env_max_degree();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    CLI::App app{"Exact completions of rational Lie algebras", "liecomp"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", c.seed, "Seed for all sampling")->capture_default_str();
    app.add_option("--samples", c.samples, "Random samples per check")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--output", c.output, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--max-degree", c.max_degree, "Largest supported minimal polynomial degree")
        ->check(CLI::PositiveNumber);

    std::function<void(const Config&, Report&)> action;
    const auto sub = [&](const char* name, const char* help, void (*fn)(const Config&, Report&)) {
        CLI::App* s = app.add_subcommand(name, help);
        s->callback([&action, fn] { action = fn; });
        return s;
    };
    const auto file_arg = [&](CLI::App* s) { s->add_option("file", c.file, "Input JSON file")->required(); };
    const auto field_opts = [&](CLI::App* s) {
        s->add_option("--minpoly", c.minpoly, "Minimal polynomial, ascending coefficients, e.g. -2,0,1");
        s->add_option("--field", c.field_file, "Field JSON file");
    };

    file_arg(sub("validate", "Check the alternating law and Jacobi identity", cmd_validate));
    {
        CLI::App* s = sub("series", "Lower central and derived series", cmd_series);
        file_arg(s);
        s->add_option("--kind", c.kind)->check(CLI::IsMember({"lower_central", "derived", "both"}));
    }
    file_arg(sub("centroid", "Centroid with its ring-structure report", cmd_centroid));
    {
        CLI::App* s = sub("centralizer", "Centralizer of a vector", cmd_centralizer);
        file_arg(s);
        s->add_option("--index", c.index, "Basis vector index");
        s->add_option("--vector", c.vector, "Vector as a JSON array of field elements");
    }
    file_arg(sub("center", "Center of the algebra", cmd_center));
    {
        CLI::App* s = sub("tensor", "Base change E (x)_Q L", cmd_tensor);
        file_arg(s);
        field_opts(s);
    }
    {
        CLI::App* s = sub("entangled", "Check N meets 1 (x) L trivially", cmd_entangled);
        file_arg(s);
        field_opts(s);
        s->add_option("--ideal", c.ideal, "JSON array of vectors spanning N")->required();
    }
    const auto completion_opts = [&](CLI::App* s) {
        file_arg(s);
        field_opts(s);
        s->add_option("--twist", c.twist, "Twist JSON file (file is then an algebra over E)");
        s->add_option("--ideal", c.ideal, "JSON array of vectors spanning N (plain quotient)");
    };
    {
        CLI::App* s = sub("complete", "Build a completion (E (x) L)/N", cmd_complete);
        completion_opts(s);
        s->add_option("--write", c.write, "Write the completion as JSON");
    }
    {
        CLI::App* s = sub("verify-action", "Check the twisted scalar action", cmd_verify_action);
        file_arg(s);
        s->add_option("--twist", c.twist, "Twist JSON file")->required();
    }
    completion_opts(sub("preserve", "Compare the series of L and K", cmd_preserve));
    {
        CLI::App* s = sub("prop1", "Companion action making Q^n one-dimensional", cmd_prop1);
        s->add_option("--n", c.n, "Dimension")->required()->check(CLI::PositiveNumber);
        s->add_option("--minpoly", c.minpoly, "Polynomial q (default t^n - 2)");
    }
    {
        CLI::App* s = sub("bound", "Centralizer bound on [E:Q]", cmd_bound);
        file_arg(s);
    }
    {
        CLI::App* s = sub("potential", "Necessary conditions for dim_E K = m", cmd_potential);
        s->add_option("--n", c.n, "dim_Q L")->required()->check(CLI::PositiveNumber);
        s->add_option("--m", c.m, "Target dim_E")->required()->check(CLI::PositiveNumber);
        s->add_option("--bound", c.bound, "Centralizer bound");
    }
    {
        CLI::App* s = sub("axioms", "Check the axiom system on an encoded structure", cmd_axioms);
        s->add_option("file", c.file, "Structure JSON file (optional with --note)");
        s->add_option("--mode", c.mode)->check(CLI::IsMember({"structural", "sampled"}));
        s->add_flag("--note", c.note, "Append the note on the non-elementary field class");
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    Report report;
    const OutputFormat format = c.output == "json" ? OutputFormat::json : OutputFormat::text;
    try {
        action(c, report);
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const EncodingError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DegreeTooLarge& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        report.fail();
        report.field("error", e.what());
        report.line(std::string("FAILS: ") + e.what());
    }
    out << emit_report(report, format);
    return report.ok() ? kExitOk : kExitCheckFailed;
}

} // namespace liecomp::cli
