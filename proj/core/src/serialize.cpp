#include "kn/serialize.hpp"

#include <fstream>
#include <sstream>

namespace kn {

Json scalar_json(const GaussianRational& x) { return x.str(); }

GaussianRational scalar_from_json(const Json& j) {
    if (j.is_string()) return GaussianRational::parse(j.get<std::string>());
    if (j.is_number_integer()) return GaussianRational(Rational(j.get<long>()));
    throw parse_error("expected a scalar string, got " + j.dump());
}

Json half_json(const HalfInteger& h) {
    if (h.is_integer()) return h.to_integer();
    return h.str();
}

HalfInteger half_from_json(const Json& j) {
    if (j.is_number_integer()) return HalfInteger(j.get<long>());
    if (j.is_string()) return HalfInteger::parse(j.get<std::string>());
    throw parse_error("expected an integer or \"t/2\" string, got " + j.dump());
}

Json polynomial_json(const Polynomial& p) {
    Json out = Json::object();
    if (p.is_zero()) return out;
    for (long e = 0; e <= p.degree(); ++e) {
        const GaussianRational& c = p.coeff(static_cast<std::size_t>(e));
        if (!c.is_zero()) out[std::to_string(e)] = c.str();
    }
    return out;
}

Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_object()) throw parse_error("polynomial must be an exponent map");
    std::map<long, GaussianRational> coeffs;
    for (auto it = j.begin(); it != j.end(); ++it) {
        long e = 0;
        try {
            std::size_t pos = 0;
            e = std::stol(it.key(), &pos);
            if (pos != it.key().size()) throw std::invalid_argument(it.key());
        } catch (const std::exception&) {
            throw parse_error("bad exponent key: " + it.key());
        }
        if (e < 0) throw parse_error("negative exponent in polynomial: " + it.key());
        coeffs[e] = scalar_from_json(it.value());
    }
    return Polynomial::from_coeff_map(coeffs);
}

Json rational_function_json(const RationalFunction& f) {
    Json out = Json::object();
    out["num"] = polynomial_json(f.num());
    out["den"] = polynomial_json(f.den());
    return out;
}

RationalFunction rational_function_from_json(const Json& j) {
    if (j.is_string() || j.is_number_integer())
        return RationalFunction(scalar_from_json(j));
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw parse_error("rational function needs {\"num\",\"den\"}");
    return RationalFunction(polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den")));
}

Json form_json(const MeromorphicForm& f) {
    Json out = Json::object();
    out["weight"] = half_json(f.weight);
    out["num"] = polynomial_json(f.rep.num());
    out["den"] = polynomial_json(f.rep.den());
    return out;
}

MeromorphicForm form_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("weight"))
        throw parse_error("form needs {\"weight\",\"num\",\"den\"}");
    return form(half_from_json(j.at("weight")),
                RationalFunction(polynomial_from_json(j.at("num")),
                                 polynomial_from_json(j.at("den"))));
}

GeometryConfig classical_geometry() {
    return {MarkedSphere({GaussianRational(0)}), ProjectiveConnection::zero(),
            AffineConnection::zero()};
}

namespace {

RationalFunction connection_from_json(const Json& j) { return rational_function_from_json(j); }

void require_valid(ConnectionKind kind, const RationalFunction& rep, const MarkedSphere& geom,
                   const char* label) {
    ConnectionReport report = validate_connection(kind, rep, geom);
    if (!report.ok)
        throw parse_error(std::string(label) + " connection rejected: " +
                          report.violations.front().message);
}

}  // namespace

GeometryConfig geometry_config_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("in_points"))
        throw parse_error("geometry config needs an \"in_points\" array");
    std::vector<GaussianRational> points;
    for (const Json& p : j.at("in_points")) points.push_back(scalar_from_json(p));
    GeometryConfig cfg{MarkedSphere(std::move(points)), ProjectiveConnection::zero(),
                       AffineConnection::zero()};
    if (j.contains("projective_connection"))
        cfg.proj.rep = connection_from_json(j.at("projective_connection"));
    if (j.contains("affine_connection"))
        cfg.aff.rep = connection_from_json(j.at("affine_connection"));
    require_valid(ConnectionKind::projective, cfg.proj.rep, cfg.geom, "projective");
    require_valid(ConnectionKind::affine, cfg.aff.rep, cfg.geom, "affine");
    return cfg;
}

Json geometry_config_json(const GeometryConfig& cfg) {
    Json out = Json::object();
    Json pts = Json::array();
    for (const auto& p : cfg.geom.in_points()) pts.push_back(p.str());
    out["in_points"] = std::move(pts);
    out["projective_connection"] = rational_function_json(cfg.proj.rep);
    out["affine_connection"] = rational_function_json(cfg.aff.rep);
    return out;
}

GeometryConfig load_geometry_file(const std::string& path) {
    return geometry_config_from_json(load_json_file(path));
}

Json structure_table_json(const StructureConstantTable& table) {
    Json out = Json::object();
    out["op"] = table.op == TableOp::product ? "product" : "bracket";
    out["lambda"] = table.lambda.str();
    out["nu"] = table.nu.str();
    out["window"] = Json::array({half_json(table.window_lo), half_json(table.window_hi)});
    Json entries = Json::array();
    for (const auto& [key, terms] : table.entries) {
        Json cell = Json::object();
        cell["n"] = half_json(key.n);
        cell["p"] = key.p;
        cell["m"] = half_json(key.m);
        cell["r"] = key.r;
        Json ts = Json::array();
        for (const auto& [target, c] : terms) {
            Json term = Json::object();
            term["h"] = half_json(target.h);
            term["s"] = target.s;
            term["c"] = c.str();
            ts.push_back(std::move(term));
        }
        cell["terms"] = std::move(ts);
        entries.push_back(std::move(cell));
    }
    out["entries"] = std::move(entries);
    return out;
}

std::string structure_table_csv(const StructureConstantTable& table) {
    std::ostringstream out;
    out << "op,lambda,nu,n,p,m,r,h,s,c\n";
    const char* op = table.op == TableOp::product ? "product" : "bracket";
    for (const auto& [key, terms] : table.entries)
        for (const auto& [target, c] : terms)
            out << op << ',' << table.lambda.str() << ',' << table.nu.str() << ',' << key.n.str()
                << ',' << key.p << ',' << key.m.str() << ',' << key.r << ',' << target.h.str()
                << ',' << target.s << ',' << c.str() << '\n';
    return out.str();
}

Json locality_json(const LocalityWindow& w) {
    Json out = Json::object();
    out["empty"] = w.empty;
    if (!w.empty) {
        out["M1"] = half_json(w.M1);
        out["M2"] = half_json(w.M2);
    }
    out["pairs_scanned"] = w.pairs_scanned;
    out["nonzero_values"] = w.nonzero_values;
    return out;
}

Json tyurin_json(const TyurinData& data) {
    Json out = Json::object();
    out["type"] = matrix_type_name(data.type);
    out["n"] = data.n;
    Json pts = Json::array();
    for (const auto& pt : data.points) {
        Json p = Json::object();
        p["gamma"] = pt.gamma.str();
        Json a = Json::array();
        for (const auto& x : pt.alpha) a.push_back(x.str());
        p["alpha"] = std::move(a);
        pts.push_back(std::move(p));
    }
    out["points"] = std::move(pts);
    if (data.type == MatrixType::sp) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < data.sigma.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < data.sigma.cols(); ++c)
                row.push_back(data.sigma(r, c).str());
            rows.push_back(std::move(row));
        }
        out["sigma"] = std::move(rows);
    }
    return out;
}

TyurinData tyurin_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j.contains("n"))
        throw parse_error("Tyurin data needs {\"type\",\"n\",\"points\"}");
    TyurinData data;
    data.type = matrix_type_from_name(j.at("type").get<std::string>());
    data.n = j.at("n").get<std::size_t>();
    if (j.contains("points"))
        for (const Json& p : j.at("points")) {
            TyurinPoint pt;
            pt.gamma = scalar_from_json(p.at("gamma"));
            for (const Json& a : p.at("alpha")) pt.alpha.push_back(scalar_from_json(a));
            data.points.push_back(std::move(pt));
        }
    if (data.type == MatrixType::sp) {
        if (!j.contains("sigma")) throw parse_error("sp Tyurin data needs \"sigma\"");
        const Json& rows = j.at("sigma");
        data.sigma = QiMatrix(rows.size(), rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != rows.size()) throw parse_error("sigma must be square");
            for (std::size_t c = 0; c < rows.size(); ++c)
                data.sigma(r, c) = scalar_from_json(rows[r][c]);
        }
    }
    return data;
}

Json rf_matrix_json(const RfMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_function_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RfMatrix rf_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw parse_error("matrix must be a nonempty array of rows");
    std::size_t n = j.size();
    RfMatrix m(n, j[0].size());
    for (std::size_t r = 0; r < n; ++r) {
        if (j[r].size() != m.cols()) throw parse_error("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = rational_function_from_json(j[r][c]);
    }
    return m;
}

Json lax_report_json(const LaxReport& r) {
    Json out = Json::object();
    out["ok"] = r.ok;
    Json issues = Json::array();
    for (const auto& issue : r.issues) {
        Json o = Json::object();
        o["point"] = issue.point;
        o["constraint"] = issue.constraint;
        o["message"] = issue.message;
        issues.push_back(std::move(o));
    }
    out["issues"] = std::move(issues);
    Json kappas = Json::array();
    for (const auto& k : r.kappas) kappas.push_back(k ? Json(k->str()) : Json(nullptr));
    out["kappas"] = std::move(kappas);
    return out;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("bad JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace kn
