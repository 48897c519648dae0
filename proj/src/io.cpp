// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "ahg/io.hpp"

#include <fstream>
#include <sstream>

namespace ahg {

using nlohmann::ordered_json;

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

class StructureReader {
public:
    StructureReader(std::string source, const ordered_json& root) : source_(std::move(source)), root_(root) {}

    StructureInput read() {
        if (!root_.is_object()) fail("", "structure file must be a JSON object");
        static const std::vector<std::string> known{"name",         "description",  "dimension",
                                                    "parameters",   "sqrt_extension", "brackets",
                                                    "metric",       "kaehler_form", "complex_volume"};
        for (const auto& [key, _] : root_.items()) {
            if (std::find(known.begin(), known.end(), key) == known.end()) fail("/" + key, "unknown field");
        }

        StructureInput in;
        in.name = required(root_, "", "name").is_string() ? root_["name"].get<std::string>() : "";
        if (in.name.empty()) fail("/name", "name must be a non-empty string");

        const auto& dim = required(root_, "", "dimension");
        if (!dim.is_number_integer()) fail("/dimension", "dimension must be an integer");
        dim_ = dim.get<int>();
        if (dim_ <= 0 || dim_ % 2 != 0 || dim_ > 24) fail("/dimension", "dimension must be even, between 2 and 24");

        if (root_.contains("parameters")) {
            const auto& ps = root_["parameters"];
            if (!ps.is_array()) fail("/parameters", "parameters must be an array of names");
            for (std::size_t k = 0; k < ps.size(); ++k) {
                const std::string ptr = "/parameters/" + std::to_string(k);
                if (!ps[k].is_string()) fail(ptr, "parameter name must be a string");
                const auto name = ps[k].get<std::string>();
                if (name.empty() || name == "r" || !std::isalpha(static_cast<unsigned char>(name[0]))) {
                    fail(ptr, "invalid parameter name '" + name + "'");
                }
                if (ctx_.parameter_index(name)) fail(ptr, "duplicate parameter '" + name + "'");
                ctx_.parameters.push_back(name);
            }
        }
        if (root_.contains("sqrt_extension")) {
            const auto& d = root_["sqrt_extension"];
            if (!d.is_number_integer() || d.get<long>() < 0) fail("/sqrt_extension", "must be a nonnegative integer");
            ctx_.d = d.get<long>();
            if (ctx_.d == 1 || (ctx_.d > 1 && !is_square_free(ctx_.d))) {
                fail("/sqrt_extension", "extension must be square-free");
            }
        }
        in.context = ctx_;

        in.algebra = read_brackets();
        in.metric = read_metric();
        in.omega = read_kaehler_form();
        if (root_.contains("complex_volume")) {
            const auto& cv = root_["complex_volume"];
            if (!cv.is_object() || !cv.contains("psi_plus")) {
                fail("/complex_volume", "expected an object with field psi_plus");
            }
            in.psi_plus = read_terms(cv["psi_plus"], "/complex_volume/psi_plus");
        }
        return in;
    }

private:
    [[noreturn]] void fail(const std::string& ptr, const std::string& what) const {
        throw ParseError(source_, ptr.empty() ? "/" : ptr, what);
    }

    const ordered_json& required(const ordered_json& obj, const std::string& ptr, const char* key) const {
        if (!obj.contains(key)) fail(ptr, std::string("missing field '") + key + "'");
        return obj[key];
    }

    int index(const ordered_json& v, const std::string& ptr) const {
        if (!v.is_number_integer()) fail(ptr, "index must be an integer");
        const int i = v.get<int>();
        if (i < 1 || i > dim_) fail(ptr, "index " + std::to_string(i) + " out of range 1.." + std::to_string(dim_));
        return i - 1;
    }

    Scalar scalar(const ordered_json& v, const std::string& ptr) const {
        try {
            if (v.is_number_integer()) return Scalar(v.get<long>());
            if (!v.is_string()) fail(ptr, "expected a scalar literal string");
            return parse_scalar(v.get<std::string>(), ctx_);
        } catch (const ScalarError& e) {
            fail(ptr, e.what());
        }
    }

    LieAlgebra read_brackets() const {
        std::vector<Bracket> out;
        if (!root_.contains("brackets")) return LieAlgebra(dim_);
        const auto& bs = root_["brackets"];
        if (!bs.is_array()) fail("/brackets", "brackets must be an array");
        for (std::size_t k = 0; k < bs.size(); ++k) {
            const std::string ptr = "/brackets/" + std::to_string(k);
            const auto& b = bs[k];
            if (!b.is_object()) fail(ptr, "bracket must be an object {i, j, coeffs}");
            Bracket br;
            br.i = index(required(b, ptr, "i"), ptr + "/i");
            br.j = index(required(b, ptr, "j"), ptr + "/j");
            if (br.i == br.j) fail(ptr, "[e_i, e_i] must not be given");
            const auto& cs = required(b, ptr, "coeffs");
            if (!cs.is_object()) fail(ptr + "/coeffs", "coeffs must be an object {\"k\": literal}");
            for (const auto& [key, val] : cs.items()) {
                const std::string cptr = ptr + "/coeffs/" + key;
                int kk = 0;
                try {
                    std::size_t used = 0;
                    kk = std::stoi(key, &used);
                    if (used != key.size()) throw std::invalid_argument(key);
                } catch (const std::exception&) {
                    fail(cptr, "coefficient key must be a basis index");
                }
                if (kk < 1 || kk > dim_) {
                    fail(cptr, "index " + std::to_string(kk) + " out of range 1.." + std::to_string(dim_));
                }
                const Scalar c = scalar(val, cptr);
                if (!c.is_zero()) br.coeffs[kk - 1] = c;
            }
            // A repeated pair must agree with the earlier entry.
            for (std::size_t prev = 0; prev < out.size(); ++prev) {
                const Bracket& o = out[prev];
                const bool same = o.i == br.i && o.j == br.j;
                const bool swapped = o.i == br.j && o.j == br.i;
                if (!same && !swapped) continue;
                bool agree = o.coeffs.size() == br.coeffs.size();
                for (const auto& [kk, c] : br.coeffs) {
                    auto it = o.coeffs.find(kk);
                    if (it == o.coeffs.end() || !(it->second == (same ? c : -c))) agree = false;
                }
                if (!agree) fail(ptr, "contradicts /brackets/" + std::to_string(prev) + " (antisymmetry)");
            }
            out.push_back(std::move(br));
        }
        return LieAlgebra::from_brackets(dim_, out);
    }

    std::optional<Matrix> read_metric() const {
        if (!root_.contains("metric")) return std::nullopt;
        const auto& m = root_["metric"];
        if (m.is_string()) {
            if (m.get<std::string>() != "identity") fail("/metric", "metric must be \"identity\" or a matrix");
            return std::nullopt;
        }
        if (!m.is_array() || m.size() != static_cast<std::size_t>(dim_)) {
            fail("/metric", "metric must be a " + std::to_string(dim_) + "x" + std::to_string(dim_) + " matrix");
        }
        Matrix G(dim_, dim_);
        for (int i = 0; i < dim_; ++i) {
            const std::string rptr = "/metric/" + std::to_string(i);
            const auto& row = m[static_cast<std::size_t>(i)];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(dim_)) fail(rptr, "row has wrong length");
            for (int j = 0; j < dim_; ++j) G(i, j) = scalar(row[static_cast<std::size_t>(j)], rptr + "/" + std::to_string(j));
        }
        for (int i = 0; i < dim_; ++i) {
            for (int j = 0; j < i; ++j) {
                if (!(G(i, j) == G(j, i))) {
                    fail("/metric/" + std::to_string(i) + "/" + std::to_string(j), "metric is not symmetric");
                }
            }
        }
        if (exactly_equal(G, Matrix(Matrix::Identity(dim_, dim_)))) return std::nullopt;
        return G;
    }

    ScalarForm read_kaehler_form() const {
        const auto& ks = required(root_, "", "kaehler_form");
        if (!ks.is_array()) fail("/kaehler_form", "kaehler_form must be an array of {i, j, c}");
        ScalarForm omega(dim_, 2);
        for (std::size_t k = 0; k < ks.size(); ++k) {
            const std::string ptr = "/kaehler_form/" + std::to_string(k);
            const auto& t = ks[k];
            if (!t.is_object()) fail(ptr, "term must be an object {i, j, c}");
            const int i = index(required(t, ptr, "i"), ptr + "/i");
            const int j = index(required(t, ptr, "j"), ptr + "/j");
            if (i == j) fail(ptr, "e^{ii} vanishes");
            omega += ScalarForm::basis(dim_, {i, j}) * scalar(required(t, ptr, "c"), ptr + "/c");
        }
        return omega;
    }

    ScalarForm read_terms(const ordered_json& ts, const std::string& ptr) const {
        if (!ts.is_array() || ts.empty()) fail(ptr, "expected a non-empty array of {idx, c}");
        std::optional<ScalarForm> out;
        for (std::size_t k = 0; k < ts.size(); ++k) {
            const std::string tptr = ptr + "/" + std::to_string(k);
            const auto& t = ts[k];
            if (!t.is_object()) fail(tptr, "term must be an object {idx, c}");
            const auto& idx = required(t, tptr, "idx");
            if (!idx.is_array() || idx.empty()) fail(tptr + "/idx", "idx must be a non-empty index array");
            std::vector<int> zero_based;
            for (std::size_t a = 0; a < idx.size(); ++a) {
                zero_based.push_back(index(idx[a], tptr + "/idx/" + std::to_string(a)));
            }
            if (!out) out.emplace(dim_, static_cast<int>(zero_based.size()));
            if (out->degree() != static_cast<int>(zero_based.size())) fail(tptr + "/idx", "mixed form degrees");
            *out += ScalarForm::basis(dim_, std::span<const int>(zero_based)) * scalar(required(t, tptr, "c"), tptr + "/c");
        }
        return *out;
    }

    std::string source_;
    const ordered_json& root_;
    ScalarContext ctx_;
    int dim_ = 0;
};

ordered_json form_json(const ScalarForm& a, const ScalarContext& ctx, bool pair_keys) {
    ordered_json out = ordered_json::array();
    a.for_each([&](Mask m, const Scalar& v) {
        const auto idx = detail::indices_of(m);
        ordered_json t;
        if (pair_keys) {
            t["i"] = idx[0] + 1;
            t["j"] = idx[1] + 1;
        } else {
            ordered_json ix = ordered_json::array();
            for (int i : idx) ix.push_back(i + 1);
            t["idx"] = ix;
        }
        t["c"] = to_literal(v, ctx);
        out.push_back(t);
    });
    return out;
}

MatrixText matrix_text(const Matrix& m, const ScalarContext& ctx) {
    MatrixText out(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(to_literal(m(i, j), ctx));
    }
    return out;
}

ordered_json terms_json(const FormTerms& t) {
    ordered_json out = ordered_json::object();
    for (const auto& [k, v] : t) out[k] = v;
    return out;
}

class ReportReader {
public:
    explicit ReportReader(const ordered_json& j) : j_(j) {}

    Report read() {
        Report r;
        r.name = str(j_, "/name", "name");
        r.dimension = at(j_, "/dimension", "dimension").get<int>();
        r.parameters = at(j_, "/parameters", "parameters").get<std::vector<std::string>>();
        r.sqrt_extension = at(j_, "/sqrt_extension", "sqrt_extension").get<long>();
        const auto& c = at(j_, "/classification", "classification");
        r.classification = str(c, "/classification/label", "label");
        r.modules = str(c, "/classification/modules", "modules");
        r.specializations = at(c, "/classification/specializations", "specializations").get<std::vector<std::string>>();
        r.theta = terms(at(j_, "/theta", "theta"), "/theta");
        const auto& dt = at(j_, "/dtheta", "dtheta");
        r.dtheta = terms(at(dt, "/dtheta/form", "form"), "/dtheta/form");
        r.dtheta_r_omega = terms(at(dt, "/dtheta/r_omega", "r_omega"), "/dtheta/r_omega");
        r.dtheta_lambda0_11 = terms(at(dt, "/dtheta/lambda0_11", "lambda0_11"), "/dtheta/lambda0_11");
        r.dtheta_lambda20 = terms(at(dt, "/dtheta/lambda20", "lambda20"), "/dtheta/lambda20");
        r.dstar_theta = str(j_, "/dstar_theta", "dstar_theta");
        const auto& xn = at(j_, "/xi_norms", "xi_norms");
        if (!xn.is_array() || xn.size() != 4) throw ParseError("<report>", "/xi_norms", "expected four entries");
        for (std::size_t i = 0; i < 4; ++i) r.xi_norms[i] = xn[i].get<std::string>();
        r.s = str(j_, "/s", "s");
        r.s_star = str(j_, "/s_star", "s_star");
        r.s_minus_s_star = str(j_, "/s_minus_s_star", "s_minus_s_star");
        r.s_plus_3s_star = str(j_, "/s_plus_3s_star", "s_plus_3s_star");
        const auto& rc = at(j_, "/ricci", "ricci");
        r.ric = mat(rc, "ric");
        r.ric_star = mat(rc, "ric_star");
        const auto& rm = at(rc, "/ricci/ric_minus_ric_star", "ric_minus_ric_star");
        r.ric_minus_ric_star_trace = mat(rm, "trace");
        r.ric_minus_ric_star_lambda0_11 = mat(rm, "lambda0_11");
        r.ric_minus_ric_star_sigma20 = mat(rm, "sigma20");
        r.ric_minus_ric_star_lambda11_skew = mat(rm, "lambda11_skew");
        r.ric_minus_ric_star_lambda20 = mat(rm, "lambda20");
        r.ric_star_lambda20 = mat(rc, "ric_star_lambda20");
        r.ric_sigma20 = mat(rc, "ric_sigma20");
        r.ric_plus_3ric_star_11 = mat(rc, "ric_plus_3ric_star_11");
        for (const auto& [conn, f] : at(j_, "/ricci_forms", "ricci_forms").items()) {
            const std::string p = "/ricci_forms/" + conn;
            r.ricci_forms.push_back({conn, terms(at(f, p + "/rho", "rho"), p + "/rho"), terms(at(f, p + "/r", "r"), p + "/r"),
                                     terms(at(f, p + "/chern_class", "chern_class"), p + "/chern_class")});
        }
        const auto& su = at(j_, "/su", "su");
        if (su.is_object()) {
            Report::SU s;
            s.psi_plus = terms(at(su, "/su/psi_plus", "psi_plus"), "/su/psi_plus");
            s.psi_minus = terms(at(su, "/su/psi_minus", "psi_minus"), "/su/psi_minus");
            s.eta = terms(at(su, "/su/eta", "eta"), "/su/eta");
            s.eta_hat = terms(at(su, "/su/eta_hat", "eta_hat"), "/su/eta_hat");
            if (su.contains("w1_plus")) s.w1_plus = str(su, "/su/w1_plus", "w1_plus");
            r.su = s;
        } else if (!su.is_null()) {
            throw ParseError("<report>", "/su", "expected an object or null");
        }
        if (j_.contains("su_note")) r.su_note = str(j_, "/su_note", "su_note");
        const auto& au = at(j_, "/audit", "audit");
        r.audit.passed = at(au, "/audit/passed", "passed").get<int>();
        r.audit.failed = at(au, "/audit/failed", "failed").get<int>();
        r.audit.skipped = at(au, "/audit/skipped", "skipped").get<int>();
        r.audit.failures = at(au, "/audit/failures", "failures").get<std::vector<std::string>>();
        r.audit.skips = at(au, "/audit/skips", "skips").get<std::vector<std::string>>();
        return r;
    }

private:
    static const ordered_json& at(const ordered_json& o, const std::string& ptr, const char* key) {
        if (!o.is_object() || !o.contains(key)) throw ParseError("<report>", ptr, "missing field");
        return o[key];
    }
    static std::string str(const ordered_json& o, const std::string& ptr, const char* key) {
        const auto& v = at(o, ptr, key);
        if (!v.is_string()) throw ParseError("<report>", ptr, "expected a string");
        return v.get<std::string>();
    }
    static FormTerms terms(const ordered_json& o, const std::string& ptr) {
        if (!o.is_object()) throw ParseError("<report>", ptr, "expected an object of basis terms");
        FormTerms out;
        for (const auto& [k, v] : o.items()) out.emplace_back(k, v.get<std::string>());
        return out;
    }
    static MatrixText mat(const ordered_json& o, const char* key) {
        return at(o, std::string("/") + key, key).get<MatrixText>();
    }

    const ordered_json& j_;
};

std::string matrix_block(const MatrixText& m, const std::string& indent) {
    std::vector<std::size_t> width;
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (width.size() <= j) width.push_back(0);
            width[j] = std::max(width[j], row[j].size());
        }
    }
    std::string out;
    for (const auto& row : m) {
        out += indent + "[";
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) out += "  ";
            out += std::string(width[j] - row[j].size(), ' ') + row[j];
        }
        out += "]\n";
    }
    return out;
}

bool all_zero(const MatrixText& m) {
    for (const auto& row : m) {
        for (const auto& v : row) {
            if (v != "0") return false;
        }
    }
    return true;
}

}  // namespace

StructureInput parse_structure(std::string_view text, std::string_view source) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        std::string what = e.what();
        if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
        throw ParseError(std::string(source), line_column(text, e.byte), what);
    }
    return StructureReader(std::string(source), root).read();
}

StructureInput load_structure(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError(path.string(), "/", "cannot open file");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_structure(ss.str(), path.string());
}

ordered_json structure_to_json(const StructureInput& in) {
    const int N = in.algebra.dim();
    ordered_json j;
    j["name"] = in.name;
    j["dimension"] = N;
    j["parameters"] = in.context.parameters;
    j["sqrt_extension"] = in.context.d;
    ordered_json bs = ordered_json::array();
    for (const auto& b : in.algebra.brackets()) {
        ordered_json cs = ordered_json::object();
        for (const auto& [k, c] : b.coeffs) cs[std::to_string(k + 1)] = to_literal(c, in.context);
        bs.push_back({{"i", b.i + 1}, {"j", b.j + 1}, {"coeffs", cs}});
    }
    j["brackets"] = bs;
    if (in.metric) {
        ordered_json m = ordered_json::array();
        for (const auto& row : matrix_text(*in.metric, in.context)) m.push_back(row);
        j["metric"] = m;
    } else {
        j["metric"] = "identity";
    }
    j["kaehler_form"] = form_json(in.omega, in.context, true);
    if (in.psi_plus) j["complex_volume"] = {{"psi_plus", form_json(*in.psi_plus, in.context, false)}};
    return j;
}

StructureInput orthonormal_input(const AlmostHermitianStructure& s) {
    StructureInput in;
    in.name = s.name;
    in.context = s.context;
    in.algebra = s.algebra;
    in.omega = s.omega;
    in.psi_plus = s.psi_plus;
    return in;
}

std::string basis_label(int dim, std::span<const int> idx) {
    std::string out;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        if (dim > 9 && a > 0) out += ",";
        out += std::to_string(idx[a] + 1);
    }
    return out;
}

FormTerms form_terms(const ScalarForm& a, const ScalarContext& ctx) {
    FormTerms out;
    a.for_each([&](Mask m, const Scalar& v) {
        const auto idx = detail::indices_of(m);
        out.emplace_back(basis_label(a.dim(), idx), to_literal(v, ctx));
    });
    return out;
}

std::string form_text(const FormTerms& terms, const ScalarContext& ctx) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto c = coefficient_text(parse_scalar(terms[k].second, ctx), ctx);
        if (k == 0) {
            if (c.negative) out += "-";
        } else {
            out += c.negative ? " - " : " + ";
        }
        if (!c.magnitude.empty()) out += c.magnitude + " ";
        out += "e^" + terms[k].first;
    }
    return out;
}

Report make_report(const Analysis& a, const AuditReport& audit) {
    const auto& ctx = a.s.context;
    Report r;
    r.name = a.s.name;
    r.dimension = a.s.dim();
    r.parameters = ctx.parameters;
    r.sqrt_extension = ctx.d;

    r.classification = a.cls.label;
    r.modules = a.cls.modules;
    for (const auto& sp : a.cls.specializations) {
        r.specializations.push_back(sp.parameter + " = " + to_literal(Scalar(sp.value), ctx) + ": W" +
                                    std::to_string(sp.component) + " vanishes");
    }

    r.theta = form_terms(a.dec.theta, ctx);
    r.dtheta = form_terms(a.dtheta.dtheta, ctx);
    r.dtheta_r_omega = form_terms(a.dtheta.parts.r_omega, ctx);
    r.dtheta_lambda0_11 = form_terms(a.dtheta.parts.lambda0_11, ctx);
    r.dtheta_lambda20 = form_terms(a.dtheta.parts.lambda20, ctx);
    r.dstar_theta = to_literal(a.dstar_theta, ctx);
    for (std::size_t i = 0; i < 4; ++i) r.xi_norms[i] = to_literal(a.dec.norms[i], ctx);

    r.s = to_literal(a.ricci.s, ctx);
    r.s_star = to_literal(a.ricci.s_star, ctx);
    r.s_minus_s_star = to_literal(a.components.s_minus_s_star, ctx);
    r.s_plus_3s_star = to_literal(a.components.s_plus_3s_star, ctx);

    r.ric = matrix_text(a.ricci.ric, ctx);
    r.ric_star = matrix_text(a.ricci.ric_star, ctx);
    const auto& rm = a.components.ric_minus_ric_star;
    r.ric_minus_ric_star_trace = matrix_text(rm.trace_part, ctx);
    r.ric_minus_ric_star_lambda0_11 = matrix_text(rm.lambda0_11, ctx);
    r.ric_minus_ric_star_sigma20 = matrix_text(rm.sigma20, ctx);
    r.ric_minus_ric_star_lambda11_skew = matrix_text(rm.lambda11_skew, ctx);
    r.ric_minus_ric_star_lambda20 = matrix_text(rm.lambda20, ctx);
    r.ric_star_lambda20 = matrix_text(a.components.ric_star_lambda20, ctx);
    r.ric_sigma20 = matrix_text(a.components.ric_sigma20, ctx);
    r.ric_plus_3ric_star_11 = matrix_text(a.components.ric_plus_3ric_star_11, ctx);

    const auto add_forms = [&](const char* name, const RicciFormPair& f) {
        r.ricci_forms.push_back({name, form_terms(f.rho, ctx), form_terms(f.r, ctx),
                                 form_terms(chern_class_representative(f), ctx)});
    };
    add_forms("levi_civita", a.forms.levi_civita);
    add_forms("minimal", a.forms.minimal);
    if (a.forms.chern) add_forms("chern", *a.forms.chern);

    if (a.su) {
        Report::SU su;
        su.psi_plus = form_terms(a.su->psi_plus, ctx);
        su.psi_minus = form_terms(a.su->psi_minus, ctx);
        su.eta = form_terms(a.su->eta, ctx);
        su.eta_hat = form_terms(a.su->eta_hat, ctx);
        if (a.su->w1_plus) su.w1_plus = to_literal(*a.su->w1_plus, ctx);
        r.su = su;
    }
    r.su_note = a.s.su_note;

    r.audit.passed = audit.passed();
    r.audit.failed = audit.failed();
    r.audit.skipped = audit.skipped();
    for (const auto& c : audit.checks) {
        if (!c.applicable) {
            r.audit.skips.push_back(c.id + ": " + c.skip_reason);
            continue;
        }
        for (const auto& label : c.failures()) r.audit.failures.push_back(c.id + ": " + label);
    }
    return r;
}

ordered_json report_to_json(const Report& r) {
    ordered_json j;
    j["name"] = r.name;
    j["dimension"] = r.dimension;
    j["parameters"] = r.parameters;
    j["sqrt_extension"] = r.sqrt_extension;
    j["classification"] = {{"label", r.classification}, {"modules", r.modules}, {"specializations", r.specializations}};
    j["theta"] = terms_json(r.theta);
    j["dtheta"] = {{"form", terms_json(r.dtheta)},
                   {"r_omega", terms_json(r.dtheta_r_omega)},
                   {"lambda0_11", terms_json(r.dtheta_lambda0_11)},
                   {"lambda20", terms_json(r.dtheta_lambda20)}};
    j["dstar_theta"] = r.dstar_theta;
    j["xi_norms"] = r.xi_norms;
    j["s"] = r.s;
    j["s_star"] = r.s_star;
    j["s_minus_s_star"] = r.s_minus_s_star;
    j["s_plus_3s_star"] = r.s_plus_3s_star;
    ordered_json rc;
    rc["ric"] = r.ric;
    rc["ric_star"] = r.ric_star;
    rc["ric_minus_ric_star"] = {{"trace", r.ric_minus_ric_star_trace},
                                {"lambda0_11", r.ric_minus_ric_star_lambda0_11},
                                {"sigma20", r.ric_minus_ric_star_sigma20},
                                {"lambda11_skew", r.ric_minus_ric_star_lambda11_skew},
                                {"lambda20", r.ric_minus_ric_star_lambda20}};
    rc["ric_star_lambda20"] = r.ric_star_lambda20;
    rc["ric_sigma20"] = r.ric_sigma20;
    rc["ric_plus_3ric_star_11"] = r.ric_plus_3ric_star_11;
    j["ricci"] = rc;
    ordered_json rf = ordered_json::object();
    for (const auto& f : r.ricci_forms) {
        rf[f.connection] = {{"rho", terms_json(f.rho)}, {"r", terms_json(f.r)}, {"chern_class", terms_json(f.chern_class)}};
    }
    j["ricci_forms"] = rf;
    if (r.su) {
        ordered_json su;
        su["psi_plus"] = terms_json(r.su->psi_plus);
        su["psi_minus"] = terms_json(r.su->psi_minus);
        su["eta"] = terms_json(r.su->eta);
        su["eta_hat"] = terms_json(r.su->eta_hat);
        if (!r.su->w1_plus.empty()) su["w1_plus"] = r.su->w1_plus;
        j["su"] = su;
    } else {
        j["su"] = nullptr;
    }
    if (!r.su_note.empty()) j["su_note"] = r.su_note;
    j["audit"] = {{"passed", r.audit.passed},
                  {"failed", r.audit.failed},
                  {"skipped", r.audit.skipped},
                  {"failures", r.audit.failures},
                  {"skips", r.audit.skips}};
    return j;
}

Report report_from_json(const ordered_json& j) {
    try {
        return ReportReader(j).read();
    } catch (const ordered_json::exception& e) {
        throw ParseError("<report>", "/", e.what());
    }
}

std::string report_text(const Report& r) {
    ScalarContext ctx;
    ctx.d = r.sqrt_extension;
    ctx.parameters = r.parameters;
    const auto form = [&](const FormTerms& t) { return form_text(t, ctx); };

    std::ostringstream os;
    os << "structure " << r.name << " (dimension " << r.dimension;
    if (!r.parameters.empty()) {
        os << ", parameters";
        for (const auto& p : r.parameters) os << " " << p;
    }
    if (r.sqrt_extension != 0) os << ", r = sqrt(" << r.sqrt_extension << ")";
    os << ")\n";
    os << "class = " << r.classification << " [" << r.modules << "]\n";
    for (const auto& sp : r.specializations) os << "  at " << sp << "\n";
    os << "|xi1|^2 = " << r.xi_norms[0] << "\n";
    os << "|xi2|^2 = " << r.xi_norms[1] << "\n";
    os << "|xi3|^2 = " << r.xi_norms[2] << "\n";
    os << "|xi4|^2 = " << r.xi_norms[3] << "\n";
    os << "\ntheta = " << form(r.theta) << "\n";
    os << "d theta = " << form(r.dtheta) << "\n";
    os << "  [R omega]      " << form(r.dtheta_r_omega) << "\n";
    os << "  [lambda0^11]   " << form(r.dtheta_lambda0_11) << "\n";
    os << "  [[lambda^20]]  " << form(r.dtheta_lambda20) << "\n";
    os << "d* theta = " << r.dstar_theta << "\n";
    os << "\ns = " << r.s << "\n";
    os << "s* = " << r.s_star << "\n";
    os << "s - s* = " << r.s_minus_s_star << "\n";
    os << "s + 3s* = " << r.s_plus_3s_star << "\n";

    const auto block = [&](const char* title, const MatrixText& m) {
        os << title;
        if (all_zero(m)) {
            os << " = 0\n";
        } else {
            os << " =\n" << matrix_block(m, "  ");
        }
    };
    os << "\n";
    block("Ric", r.ric);
    block("Ric*", r.ric_star);
    block("(Ric - Ric*)_R", r.ric_minus_ric_star_trace);
    block("(Ric - Ric*)_[lambda0^11]", r.ric_minus_ric_star_lambda0_11);
    block("(Ric - Ric*)_[[sigma^20]]", r.ric_minus_ric_star_sigma20);
    block("(Ric - Ric*)_[lambda^11] skew", r.ric_minus_ric_star_lambda11_skew);
    block("(Ric - Ric*)_[[lambda^20]]", r.ric_minus_ric_star_lambda20);
    block("Ric*_[[lambda^20]]", r.ric_star_lambda20);
    block("Ric_[[sigma^20]]", r.ric_sigma20);
    block("(Ric + 3Ric*)_[lambda^11]", r.ric_plus_3ric_star_11);

    os << "\n";
    for (const auto& f : r.ricci_forms) {
        os << "rho[" << f.connection << "] = " << form(f.rho) << "\n";
        os << "r[" << f.connection << "] = " << form(f.r) << "\n";
        os << "c1[" << f.connection << "] = " << form(f.chern_class) << "  (divide by 2*pi)\n";
    }
    if (r.su) {
        os << "\npsi+ = " << form(r.su->psi_plus) << "\n";
        os << "psi- = " << form(r.su->psi_minus) << "\n";
        os << "eta = " << form(r.su->eta) << "\n";
        os << "eta^ = " << form(r.su->eta_hat) << "\n";
        if (!r.su->w1_plus.empty()) os << "w1+ = " << r.su->w1_plus << "\n";
    } else if (!r.su_note.empty()) {
        os << "\nno SU data: " << r.su_note << "\n";
    }

    os << "\naudit: " << r.audit.passed << " passed, " << r.audit.failed << " failed, " << r.audit.skipped
       << " skipped\n";
    for (const auto& f : r.audit.failures) os << "  FAIL " << f << "\n";
    for (const auto& s : r.audit.skips) os << "  skip " << s << "\n";
    return os.str();
}

}  // namespace ahg
