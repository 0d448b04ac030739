// kn: command line front end for the exact engine of graded form algebras on
// the N-point sphere.  Every output is deterministic for a fixed
// configuration and seed: ordered keys, exact scalars, no timestamps.
//
// Exit codes: 0 success, 2 configuration error, 3 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kn/algebras.hpp"
#include "kn/cocycles.hpp"
#include "kn/fock.hpp"
#include "kn/lax.hpp"
#include "kn/serialize.hpp"
#include "kn/verify.hpp"

namespace {

using kn::Json;

struct CommonFlags {
    std::string geometry_path;
    std::string out_path;
    std::string format = "json";
    std::string window = "-3:3";
    std::string cycle;
    unsigned jobs = 0;  // 0 = resolve from environment
    std::uint64_t seed = 12345;
};

unsigned resolve_jobs(unsigned flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("KN_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

kn::GeometryConfig resolve_geometry(const CommonFlags& flags) {
    if (flags.geometry_path.empty()) return kn::classical_geometry();
    return kn::load_geometry_file(flags.geometry_path);
}

std::pair<kn::HalfInteger, kn::HalfInteger> parse_window(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw kn::parse_error("window must be LO:HI, got \"" + s + "\"");
    kn::HalfInteger lo = kn::HalfInteger::parse(s.substr(0, colon));
    kn::HalfInteger hi = kn::HalfInteger::parse(s.substr(colon + 1));
    if (hi < lo) throw kn::parse_error("window has lo > hi");
    return {lo, hi};
}

kn::CycleClass parse_cycle(const std::string& s, const kn::MarkedSphere& geom) {
    if (s.empty()) return kn::CycleClass::separating(geom);
    std::vector<long> mult;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string item = s.substr(start, comma == std::string::npos ? comma : comma - start);
        try {
            std::size_t pos = 0;
            mult.push_back(std::stol(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw kn::parse_error("bad cycle multiplicity \"" + item + "\"");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(mult.size()) != geom.K())
        throw kn::parse_error("cycle needs one multiplicity per in-point");
    return kn::CycleClass(std::move(mult));
}

void emit(const CommonFlags& flags, const std::string& text) {
    if (flags.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(flags.out_path, std::ios::binary);
    if (!out) throw kn::parse_error("cannot write " + flags.out_path);
    out << text;
}

void emit_json(const CommonFlags& flags, const Json& j) { emit(flags, kn::dump_json(j)); }

void require_json_format(const CommonFlags& flags) {
    if (flags.format != "json")
        throw kn::parse_error("this command only emits json");
}

// ---- basis ---------------------------------------------------------------

int cmd_basis(const CommonFlags& flags, const std::string& lambda_str) {
    kn::GeometryConfig cfg = resolve_geometry(flags);
    kn::BasisCache basis(cfg.geom);
    kn::HalfInteger lambda = kn::HalfInteger::parse(lambda_str);
    auto [lo, hi] = parse_window(flags.window);
    const int K = cfg.geom.K();

    struct Row {
        kn::HalfInteger n;
        int p;
        kn::MeromorphicForm f;
        std::vector<long> in_orders;
        long out_order;
        kn::GaussianRational scale;
    };
    std::vector<Row> rows;
    for (kn::HalfInteger n : kn::degree_range(lambda, lo, hi))
        for (int p = 1; p <= K; ++p) {
            Row row{n, p, basis.element({lambda, n, p}), {}, 0, kn::GaussianRational()};
            for (int i = 1; i <= K; ++i)
                row.in_orders.push_back(
                    *kn::form_order_at(row.f, kn::ExtendedPoint(cfg.geom.point(i))));
            row.out_order = *kn::form_order_at(row.f, kn::ExtendedPoint::infinity());
            // den is monic, so the representative's scale is the leading
            // numerator coefficient.
            row.scale = row.f.rep.num().leading();
            rows.push_back(std::move(row));
        }

    auto factored = [&](const Row& row) {
        std::string s = row.scale.str();
        long base = (row.n + kn::HalfInteger(1) - lambda).to_integer();
        for (int i = 1; i <= K; ++i) {
            long e = base - (i == row.p ? 1 : 0);
            if (e == 0) continue;
            s += " (z - " + cfg.geom.point(i).str() + ")^" + std::to_string(e);
        }
        return s;
    };

    if (flags.format == "csv") {
        std::ostringstream out;
        out << "lambda,n,p,scale,out_order,in_orders,factored\n";
        for (const Row& row : rows) {
            out << lambda.str() << ',' << row.n.str() << ',' << row.p << ',' << row.scale.str()
                << ',' << row.out_order << ',';
            for (std::size_t i = 0; i < row.in_orders.size(); ++i)
                out << (i ? ";" : "") << row.in_orders[i];
            out << ',' << factored(row) << '\n';
        }
        emit(flags, out.str());
        return 0;
    }

    Json out = Json::object();
    out["command"] = "basis";
    out["geometry"] = kn::geometry_config_json(cfg);
    out["lambda"] = lambda.str();
    out["window"] = Json::array({kn::half_json(lo), kn::half_json(hi)});
    out["local_coordinate"] = "z - P_p";
    Json elements = Json::array();
    for (const Row& row : rows) {
        Json e = Json::object();
        e["n"] = kn::half_json(row.n);
        e["p"] = row.p;
        e["num"] = kn::polynomial_json(row.f.rep.num());
        e["den"] = kn::polynomial_json(row.f.rep.den());
        e["scale"] = row.scale.str();
        e["factored"] = factored(row);
        e["in_orders"] = row.in_orders;
        e["out_order"] = row.out_order;
        elements.push_back(std::move(e));
    }
    out["elements"] = std::move(elements);
    emit_json(flags, out);
    return 0;
}

// ---- pairing ---------------------------------------------------------------

int cmd_pairing(const CommonFlags& flags, const std::string& lambda_str) {
    kn::GeometryConfig cfg = resolve_geometry(flags);
    kn::BasisCache basis(cfg.geom);
    kn::HalfInteger lambda = kn::HalfInteger::parse(lambda_str);
    kn::HalfInteger mu = kn::HalfInteger(1) - lambda;
    auto [lo, hi] = parse_window(flags.window);
    const int K = cfg.geom.K();

    std::ostringstream csv;
    csv << "lambda,n,p,m,r,value\n";
    Json entries = Json::array();
    for (kn::HalfInteger n : kn::degree_range(lambda, lo, hi))
        for (int p = 1; p <= K; ++p)
            for (kn::HalfInteger m : kn::degree_range(lambda, lo, hi))
                for (int r = 1; r <= K; ++r) {
                    kn::GaussianRational v =
                        kn::kn_pairing(basis.element({lambda, n, p}),
                                       basis.element({mu, -m, r}), cfg.geom);
                    if (flags.format == "csv") {
                        csv << lambda.str() << ',' << n.str() << ',' << p << ',' << m.str() << ','
                            << r << ',' << v.str() << '\n';
                    } else {
                        Json e = Json::object();
                        e["n"] = kn::half_json(n);
                        e["p"] = p;
                        e["m"] = kn::half_json(m);
                        e["r"] = r;
                        e["value"] = v.str();
                        entries.push_back(std::move(e));
                    }
                }
    if (flags.format == "csv") {
        emit(flags, csv.str());
        return 0;
    }
    Json out = Json::object();
    out["command"] = "pairing";
    out["geometry"] = kn::geometry_config_json(cfg);
    out["lambda"] = lambda.str();
    out["dual_weight"] = mu.str();
    out["window"] = Json::array({kn::half_json(lo), kn::half_json(hi)});
    out["entries"] = std::move(entries);
    emit_json(flags, out);
    return 0;
}

// ---- structconsts ----------------------------------------------------------

int cmd_structconsts(const CommonFlags& flags, const std::string& lambda_str,
                     const std::string& nu_str, const std::string& op_str,
                     std::optional<long> margin_flag) {
    kn::GeometryConfig cfg = resolve_geometry(flags);
    kn::BasisCache basis(cfg.geom);
    kn::HalfInteger lambda = kn::HalfInteger::parse(lambda_str);
    kn::HalfInteger nu = kn::HalfInteger::parse(nu_str);
    kn::TableOp op;
    if (op_str == "product")
        op = kn::TableOp::product;
    else if (op_str == "bracket")
        op = kn::TableOp::bracket;
    else
        throw kn::parse_error("op must be product or bracket");
    auto [lo, hi] = parse_window(flags.window);

    kn::StructureConstantTable table =
        kn::structure_constants(basis, lambda, nu, op, lo, hi, resolve_jobs(flags.jobs));
    kn::GradingBounds bounds = kn::grading_bounds(table);

    // Every cell is expanded completely, so the automatic margin keeps all
    // terms.  An explicit smaller margin truncates target degrees above
    // n + m + margin and the emitted grading bounds with them.
    long auto_margin = bounds.upper_shift + 2;
    long margin = margin_flag.value_or(auto_margin);
    bool truncated = false;
    if (margin < bounds.upper_shift) {
        truncated = true;
        std::cerr << "warning: margin " << margin << " is below the observed upper shift "
                  << bounds.upper_shift << " + 2; grading bounds may be truncated\n";
        for (auto& [key, terms] : table.entries) {
            kn::HalfInteger cut = key.n + key.m + kn::HalfInteger(margin);
            for (auto it = terms.begin(); it != terms.end();)
                it = it->first.h > cut ? terms.erase(it) : std::next(it);
        }
        bounds = kn::grading_bounds(table);
    }

    if (flags.format == "csv") {
        emit(flags, kn::structure_table_csv(table));
        return 0;
    }
    Json out = Json::object();
    out["command"] = "structconsts";
    out["geometry"] = kn::geometry_config_json(cfg);
    Json body = kn::structure_table_json(table);
    body["margin"] = margin;
    body["grading_bounds"] = Json::array({bounds.lower_shift, bounds.upper_shift});
    if (truncated) body["warning"] = "grading bounds may be truncated";
    for (auto& [k, v] : body.items()) out[k] = std::move(v);
    emit_json(flags, out);
    return 0;
}

// ---- cocycle ---------------------------------------------------------------

int cmd_cocycle(const CommonFlags& flags, const std::string& kind,
                const std::string& algebra_name) {
    kn::GeometryConfig cfg = resolve_geometry(flags);
    kn::BasisCache basis(cfg.geom);
    auto [lo, hi] = parse_window(flags.window);
    kn::CycleClass cycle = parse_cycle(flags.cycle, cfg.geom);
    const int K = cfg.geom.K();
    require_json_format(flags);

    Json values = Json::array();
    kn::ScanConfig scan;
    scan.lo = lo;
    scan.hi = hi;
    scan.jobs = resolve_jobs(flags.jobs);
    kn::CocycleSet set{cycle, cfg.proj, cfg.aff};
    kn::FiniteLieAlgebra alg = kn::FiniteLieAlgebra::by_name(algebra_name);

    auto push_pair = [&values](std::initializer_list<std::pair<const char*, Json>> fields,
                               const kn::GaussianRational& v) {
        if (v.is_zero()) return;
        Json e = Json::object();
        for (const auto& [k, j] : fields) e[k] = j;
        e["value"] = v.str();
        values.push_back(std::move(e));
    };

    if (kind == "psi1") {
        scan.kind = kn::AlgebraKind::functions;
        for (kn::HalfInteger n : kn::degree_range(kn::HalfInteger(0), lo, hi))
            for (int p = 1; p <= K; ++p)
                for (kn::HalfInteger m : kn::degree_range(kn::HalfInteger(0), lo, hi))
                    for (int r = 1; r <= K; ++r)
                        push_pair({{"n", kn::half_json(n)},
                                   {"p", p},
                                   {"m", kn::half_json(m)},
                                   {"r", r}},
                                  kn::psi1(basis.element({kn::HalfInteger(0), n, p}),
                                           basis.element({kn::HalfInteger(0), m, r}), cycle,
                                           cfg.geom));
    } else if (kind == "psi2") {
        scan.kind = kn::AlgebraKind::current;
        scan.algebra = &alg;
        for (std::size_t a = 0; a < alg.dim(); ++a)
            for (kn::HalfInteger n : kn::degree_range(kn::HalfInteger(0), lo, hi))
                for (int p = 1; p <= K; ++p)
                    for (std::size_t b = 0; b < alg.dim(); ++b)
                        for (kn::HalfInteger m : kn::degree_range(kn::HalfInteger(0), lo, hi))
                            for (int r = 1; r <= K; ++r)
                                push_pair(
                                    {{"a", a},
                                     {"n", kn::half_json(n)},
                                     {"p", p},
                                     {"b", b},
                                     {"m", kn::half_json(m)},
                                     {"r", r}},
                                    kn::psi2(alg,
                                             kn::CurrentElement::pure(
                                                 alg, a,
                                                 basis.element({kn::HalfInteger(0), n, p})),
                                             kn::CurrentElement::pure(
                                                 alg, b,
                                                 basis.element({kn::HalfInteger(0), m, r})),
                                             cycle, cfg.geom));
    } else if (kind == "psi3") {
        scan.kind = kn::AlgebraKind::vector_fields;
        for (kn::HalfInteger n : kn::degree_range(kn::HalfInteger(-1), lo, hi))
            for (int p = 1; p <= K; ++p)
                for (kn::HalfInteger m : kn::degree_range(kn::HalfInteger(-1), lo, hi))
                    for (int r = 1; r <= K; ++r)
                        push_pair({{"n", kn::half_json(n)},
                                   {"p", p},
                                   {"m", kn::half_json(m)},
                                   {"r", r}},
                                  kn::psi3(basis.element({kn::HalfInteger(-1), n, p}),
                                           basis.element({kn::HalfInteger(-1), m, r}), cfg.proj,
                                           cycle, cfg.geom));
    } else if (kind == "psi4") {
        scan.kind = kn::AlgebraKind::d1;
        for (kn::HalfInteger n : kn::degree_range(kn::HalfInteger(-1), lo, hi))
            for (int p = 1; p <= K; ++p)
                for (kn::HalfInteger m : kn::degree_range(kn::HalfInteger(0), lo, hi))
                    for (int r = 1; r <= K; ++r)
                        push_pair({{"n", kn::half_json(n)},
                                   {"p", p},
                                   {"m", kn::half_json(m)},
                                   {"r", r}},
                                  kn::psi4(basis.element({kn::HalfInteger(-1), n, p}),
                                           basis.element({kn::HalfInteger(0), m, r}), cfg.aff,
                                           cycle, cfg.geom));
    } else if (kind == "phi") {
        scan.kind = kn::AlgebraKind::super_alg;
        struct Item {
            int parity;
            kn::HalfInteger n;
            int p;
            kn::SuperElement el;
        };
        std::vector<Item> items;
        for (kn::HalfInteger n : kn::degree_range(kn::HalfInteger(-1), lo, hi))
            for (int p = 1; p <= K; ++p)
                items.push_back({0, n, p,
                                 kn::SuperElement::from_even(
                                     basis.element({kn::HalfInteger(-1), n, p}))});
        for (kn::HalfInteger n : kn::degree_range(kn::HalfInteger::from_twice(-1), lo, hi))
            for (int p = 1; p <= K; ++p)
                items.push_back({1, n, p,
                                 kn::SuperElement::from_odd(
                                     basis.element({kn::HalfInteger::from_twice(-1), n, p}))});
        for (const Item& x : items)
            for (const Item& y : items)
                push_pair({{"xparity", x.parity},
                           {"n", kn::half_json(x.n)},
                           {"p", x.p},
                           {"yparity", y.parity},
                           {"m", kn::half_json(y.n)},
                           {"r", y.p}},
                          kn::super_phi(x.el, y.el, cfg.proj, cycle, cfg.geom));
    } else {
        throw kn::parse_error("kind must be one of psi1 psi2 psi3 psi4 phi");
    }

    kn::LocalityWindow window = kn::locality_scan(set, scan, basis);

    Json out = Json::object();
    out["command"] = "cocycle";
    out["geometry"] = kn::geometry_config_json(cfg);
    out["kind"] = kind;
    if (kind == "psi2") out["algebra"] = alg.name();
    out["cycle"] = cycle.multiplicities();
    out["window"] = Json::array({kn::half_json(lo), kn::half_json(hi)});
    out["values"] = std::move(values);
    out["locality"] = kn::locality_json(window);
    emit_json(flags, out);
    return 0;
}

// ---- extend ----------------------------------------------------------------

int cmd_extend(const CommonFlags& flags, const std::string& kind, const std::string& scale_str,
               const std::string& algebra_name) {
    kn::GeometryConfig cfg = resolve_geometry(flags);
    kn::BasisCache basis(cfg.geom);
    auto [lo, hi] = parse_window(flags.window);
    kn::CycleClass cycle = parse_cycle(flags.cycle, cfg.geom);
    const int K = cfg.geom.K();
    require_json_format(flags);
    kn::GaussianRational scale = kn::GaussianRational::parse(scale_str);

    Json out = Json::object();
    out["command"] = "extend";
    out["geometry"] = kn::geometry_config_json(cfg);
    out["kind"] = kind;
    out["scale"] = scale.str();
    out["cycle"] = cycle.multiplicities();
    out["window"] = Json::array({kn::half_json(lo), kn::half_json(hi)});
    Json brackets = Json::array();

    if (kind == "vector_fields") {
        std::vector<kn::MeromorphicForm> sample;
        for (kn::HalfInteger n : kn::degree_range(kn::HalfInteger(-1), lo, hi))
            for (int p = 1; p <= K; ++p)
                sample.push_back(basis.element({kn::HalfInteger(-1), n, p}));
        kn::CentralExtension<kn::MeromorphicForm> ext(
            [](const kn::MeromorphicForm& a, const kn::MeromorphicForm& b) {
                return kn::form_bracket(a, b);
            },
            [&](const kn::MeromorphicForm& a, const kn::MeromorphicForm& b) {
                return kn::psi3(a, b, cfg.proj, cycle, cfg.geom);
            },
            scale, sample,
            [](const kn::MeromorphicForm& f) { return f.str(); });
        out["certified_sample"] = sample.size();
        std::size_t i = 0;
        for (kn::HalfInteger n : kn::degree_range(kn::HalfInteger(-1), lo, hi))
            for (int p = 1; p <= K; ++p, ++i) {
                std::size_t j = 0;
                for (kn::HalfInteger m : kn::degree_range(kn::HalfInteger(-1), lo, hi))
                    for (int r = 1; r <= K; ++r, ++j) {
                        kn::Extended<kn::MeromorphicForm> x{sample[i], kn::GaussianRational(0)};
                        kn::Extended<kn::MeromorphicForm> y{sample[j], kn::GaussianRational(0)};
                        kn::GaussianRational central = ext.bracket(x, y).central;
                        if (central.is_zero()) continue;
                        Json e = Json::object();
                        e["n"] = kn::half_json(n);
                        e["p"] = p;
                        e["m"] = kn::half_json(m);
                        e["r"] = r;
                        e["central"] = central.str();
                        brackets.push_back(std::move(e));
                    }
            }
    } else if (kind == "current") {
        kn::FiniteLieAlgebra alg = kn::FiniteLieAlgebra::by_name(algebra_name);
        out["algebra"] = alg.name();
        std::vector<kn::CurrentElement> sample;
        struct Tag {
            std::size_t a;
            kn::HalfInteger n;
            int p;
        };
        std::vector<Tag> tags;
        for (std::size_t a = 0; a < alg.dim(); ++a)
            for (kn::HalfInteger n : kn::degree_range(kn::HalfInteger(0), lo, hi))
                for (int p = 1; p <= K; ++p) {
                    sample.push_back(kn::CurrentElement::pure(
                        alg, a, basis.element({kn::HalfInteger(0), n, p})));
                    tags.push_back({a, n, p});
                }
        kn::CentralExtension<kn::CurrentElement> ext(
            [&](const kn::CurrentElement& x, const kn::CurrentElement& y) {
                return kn::current_bracket(alg, x, y);
            },
            [&](const kn::CurrentElement& x, const kn::CurrentElement& y) {
                return kn::psi2(alg, x, y, cycle, cfg.geom);
            },
            scale, sample, [](const kn::CurrentElement&) { return std::string("current element"); });
        out["certified_sample"] = sample.size();
        for (std::size_t i = 0; i < sample.size(); ++i)
            for (std::size_t j = 0; j < sample.size(); ++j) {
                kn::Extended<kn::CurrentElement> x{sample[i], kn::GaussianRational(0)};
                kn::Extended<kn::CurrentElement> y{sample[j], kn::GaussianRational(0)};
                kn::GaussianRational central = ext.bracket(x, y).central;
                if (central.is_zero()) continue;
                Json e = Json::object();
                e["a"] = tags[i].a;
                e["n"] = kn::half_json(tags[i].n);
                e["p"] = tags[i].p;
                e["b"] = tags[j].a;
                e["m"] = kn::half_json(tags[j].n);
                e["r"] = tags[j].p;
                e["central"] = central.str();
                brackets.push_back(std::move(e));
            }
    } else {
        throw kn::parse_error("kind must be vector_fields or current");
    }

    out["brackets"] = std::move(brackets);
    emit_json(flags, out);
    return 0;
}

// ---- fock ------------------------------------------------------------------

int cmd_fock(const CommonFlags& flags, const std::string& lambda_str, const std::string& t_str,
             const std::string& op_weight_str, const std::string& op_degree_str, int op_point) {
    kn::GeometryConfig cfg = resolve_geometry(flags);
    kn::BasisCache basis(cfg.geom);
    require_json_format(flags);
    kn::HalfInteger lambda = kn::HalfInteger::parse(lambda_str);
    kn::HalfInteger T = t_str.empty() ? lambda : kn::HalfInteger::parse(t_str);
    auto [lo, hi] = parse_window(flags.window);
    kn::HalfInteger op_weight = kn::HalfInteger::parse(op_weight_str);
    kn::HalfInteger op_degree = kn::HalfInteger::parse(op_degree_str);
    if (op_weight != kn::HalfInteger(0) && op_weight != kn::HalfInteger(-1))
        throw kn::parse_error("operator weight must be 0 (function) or -1 (vector field)");

    kn::FockSpace space(basis, lambda, T);
    kn::MeromorphicForm op_form = basis.element({op_weight, op_degree, op_point});
    kn::D1Element op = op_weight == kn::HalfInteger(0)
                           ? kn::D1Element::from_function(op_form)
                           : kn::D1Element::from_vector_field(op_form);
    kn::FockOperator rep(space, op);

    std::vector<kn::WedgeMonomial> monos = kn::window_monomials(basis, lambda, lo, hi);

    Json out = Json::object();
    out["command"] = "fock";
    out["geometry"] = kn::geometry_config_json(cfg);
    out["lambda"] = lambda.str();
    out["vacuum_degree"] = kn::half_json(T);
    out["window"] = Json::array({kn::half_json(lo), kn::half_json(hi)});
    Json op_json = Json::object();
    op_json["weight"] = kn::half_json(op_weight);
    op_json["degree"] = kn::half_json(op_degree);
    op_json["point"] = op_point;
    out["operator"] = std::move(op_json);

    Json action = Json::array();
    for (const kn::WedgeMonomial& m : monos) {
        kn::FockVector v(m);
        kn::FockVector image = rep.apply(v);
        Json row = Json::object();
        row["from"] = m.str();
        Json terms = Json::array();
        for (const auto& [mono, c] : image.terms()) {
            Json t = Json::object();
            t["to"] = mono.str();
            t["c"] = c.str();
            terms.push_back(std::move(t));
        }
        row["terms"] = std::move(terms);
        action.push_back(std::move(row));
    }
    out["action"] = std::move(action);

    // Central scalars for vector-field operators of nonzero integral degree:
    // the representation cocycle against the opposite-degree field.
    if (op_weight == kn::HalfInteger(-1) && op_degree.is_integer() &&
        op_degree != kn::HalfInteger(0)) {
        kn::D1Element opposite = kn::D1Element::from_vector_field(
            basis.element({kn::HalfInteger(-1), -op_degree, op_point}));
        std::vector<kn::WedgeMonomial> probes = {space.vacuum(T)};
        if (!monos.empty()) probes.push_back(monos.front());
        kn::GaussianRational chi = kn::rep_cocycle(space, op, opposite, probes);
        Json central = Json::object();
        central["n"] = kn::half_json(op_degree);
        central["chi"] = chi.str();
        out["central"] = std::move(central);
    }

    emit_json(flags, out);
    return 0;
}

// ---- lax ---------------------------------------------------------------

int cmd_lax_check(const CommonFlags& flags, const std::string& data_path,
                  const std::string& element_path) {
    kn::GeometryConfig cfg = resolve_geometry(flags);
    require_json_format(flags);
    kn::TyurinData data = kn::tyurin_from_json(kn::load_json_file(data_path));
    kn::RfMatrix L = kn::rf_matrix_from_json(kn::load_json_file(element_path));
    kn::LaxReport report = kn::is_lax_element(L, data, cfg.geom);
    Json out = Json::object();
    out["command"] = "lax check";
    out["geometry"] = kn::geometry_config_json(cfg);
    out["data"] = kn::tyurin_json(data);
    out["report"] = kn::lax_report_json(report);
    emit_json(flags, out);
    return 0;
}

int cmd_lax_make(const CommonFlags& flags, const std::string& data_path) {
    kn::GeometryConfig cfg = resolve_geometry(flags);
    require_json_format(flags);
    kn::TyurinData data = kn::tyurin_from_json(kn::load_json_file(data_path));
    std::mt19937_64 rng(flags.seed);
    kn::RfMatrix L = kn::make_lax_element(data, kn::random_lax_params(data, rng), cfg.geom);
    Json out = Json::object();
    out["command"] = "lax make";
    out["seed"] = flags.seed;
    out["data"] = kn::tyurin_json(data);
    out["element"] = kn::rf_matrix_json(L);
    emit_json(flags, out);
    return 0;
}

int cmd_lax_close_check(const CommonFlags& flags, const std::string& type_str, std::size_t size,
                        int points, int pairs) {
    kn::GeometryConfig cfg = resolve_geometry(flags);
    require_json_format(flags);
    kn::MatrixType type = kn::matrix_type_from_name(type_str);
    std::mt19937_64 rng(flags.seed);
    kn::TyurinData data = kn::random_tyurin_data(type, size, points, cfg.geom, rng);
    kn::LaxClosureReport report = kn::certify_lax_closure(data, cfg.geom, flags.seed + 1, pairs);
    Json out = Json::object();
    out["command"] = "lax close-check";
    out["geometry"] = kn::geometry_config_json(cfg);
    out["seed"] = flags.seed;
    out["data"] = kn::tyurin_json(data);
    out["pairs_checked"] = report.pairs_checked;
    out["ok"] = report.ok;
    if (!report.ok) out["witness"] = report.witness;
    emit_json(flags, out);
    return report.ok ? 0 : 3;
}

// ---- verify ------------------------------------------------------------

int cmd_verify(const CommonFlags& flags, long window, int triples) {
    kn::GeometryConfig cfg = resolve_geometry(flags);
    require_json_format(flags);
    kn::VerifyOptions opt;
    opt.window = window;
    opt.random_triples = triples;
    opt.seed = flags.seed;
    opt.jobs = resolve_jobs(flags.jobs);
    std::vector<kn::CheckResult> results = kn::run_verification(cfg, opt);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "[ok]   " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
        all = all && r.passed;
    }
    Json out = kn::verification_json(results);
    out["seed"] = flags.seed;
    if (!flags.out_path.empty()) {
        std::ofstream f(flags.out_path, std::ios::binary);
        if (!f) throw kn::parse_error("cannot write " + flags.out_path);
        f << kn::dump_json(out);
    }
    return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for graded algebras of meromorphic forms on the N-point sphere"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonFlags flags;
    app.add_option("--geometry", flags.geometry_path, "geometry config JSON file");
    app.add_option("--out", flags.out_path, "output file (default stdout)");
    app.add_option("--format", flags.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--window", flags.window, "degree window LO:HI");
    app.add_option("--cycle", flags.cycle, "cycle multiplicities m1,m2,...");
    app.add_option("--jobs", flags.jobs, "worker threads (default env KN_JOBS or 1)");
    app.add_option("--seed", flags.seed, "seed for randomized suites");

    std::string lambda = "-1", nu = "-1", op = "bracket";
    std::optional<long> margin;
    auto* basis_cmd = app.add_subcommand("basis", "graded basis elements with order metadata");
    basis_cmd->add_option("--lambda", lambda, "form weight (half-integers as t/2)");

    auto* pairing_cmd = app.add_subcommand("pairing", "duality pairing table");
    pairing_cmd->add_option("--lambda", lambda, "form weight");

    auto* sc_cmd = app.add_subcommand("structconsts", "structure constant tables");
    sc_cmd->add_option("--lambda", lambda, "left weight");
    sc_cmd->add_option("--nu", nu, "right weight");
    sc_cmd->add_option("--op", op, "product|bracket");
    sc_cmd->add_option("--margin", margin, "target degree margin above n+m");

    std::string kind = "psi3", algebra = "sl2", scale = "1";
    auto* cocycle_cmd = app.add_subcommand("cocycle", "cocycle value tables and locality");
    cocycle_cmd->add_option("--kind", kind, "psi1|psi2|psi3|psi4|phi");
    cocycle_cmd->add_option("--algebra", algebra, "finite algebra for psi2");

    auto* extend_cmd = app.add_subcommand("extend", "certified central extensions");
    extend_cmd->add_option("--kind", kind, "vector_fields|current");
    extend_cmd->add_option("--scale", scale, "cocycle scale, e.g. -1/12");
    extend_cmd->add_option("--algebra", algebra, "finite algebra for current");

    std::string fock_lambda = "0", fock_T, op_weight = "-1", op_degree = "1";
    int op_point = 1;
    auto* fock_cmd = app.add_subcommand("fock", "wedge representation tables");
    fock_cmd->add_option("--lambda", fock_lambda, "form weight of the wedge space");
    fock_cmd->add_option("--vacuum", fock_T, "vacuum degree (default lambda)");
    fock_cmd->add_option("--op-weight", op_weight, "0 for functions, -1 for vector fields");
    fock_cmd->add_option("--op-degree", op_degree, "operator degree");
    fock_cmd->add_option("--op-point", op_point, "operator point index");

    auto* lax_cmd = app.add_subcommand("lax", "Lax operator algebras");
    lax_cmd->require_subcommand(1);
    lax_cmd->fallthrough();
    std::string data_path, element_path, lax_type = "gl";
    std::size_t lax_size = 2;
    int lax_points = 2, lax_pairs = 20;
    auto* lax_check = lax_cmd->add_subcommand("check", "membership report for an element");
    lax_check->add_option("--data", data_path, "Tyurin data JSON")->required();
    lax_check->add_option("--element", element_path, "matrix JSON")->required();
    auto* lax_make = lax_cmd->add_subcommand("make", "seeded random element");
    lax_make->add_option("--data", data_path, "Tyurin data JSON")->required();
    auto* lax_close = lax_cmd->add_subcommand("close-check", "randomized closure certification");
    lax_close->add_option("--type", lax_type, "gl|sl|so|sp");
    lax_close->add_option("--size", lax_size, "matrix size");
    lax_close->add_option("--points", lax_points, "number of Tyurin points");
    lax_close->add_option("--pairs", lax_pairs, "number of random pairs");

    long verify_window = 2;
    int verify_triples = 60;
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant battery");
    verify_cmd->add_option("--verify-window", verify_window, "degree half-width");
    verify_cmd->add_option("--triples", verify_triples, "randomized triples per suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (basis_cmd->parsed()) return cmd_basis(flags, lambda);
        if (pairing_cmd->parsed()) return cmd_pairing(flags, lambda);
        if (sc_cmd->parsed()) return cmd_structconsts(flags, lambda, nu, op, margin);
        if (cocycle_cmd->parsed()) return cmd_cocycle(flags, kind, algebra);
        if (extend_cmd->parsed()) return cmd_extend(flags, kind, scale, algebra);
        if (fock_cmd->parsed())
            return cmd_fock(flags, fock_lambda, fock_T, op_weight, op_degree, op_point);
        if (lax_cmd->parsed()) {
            if (lax_check->parsed()) return cmd_lax_check(flags, data_path, element_path);
            if (lax_make->parsed()) return cmd_lax_make(flags, data_path);
            if (lax_close->parsed())
                return cmd_lax_close_check(flags, lax_type, lax_size, lax_points, lax_pairs);
        }
        if (verify_cmd->parsed()) return cmd_verify(flags, verify_window, verify_triples);
    } catch (const kn::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kn::defect_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const kn::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
