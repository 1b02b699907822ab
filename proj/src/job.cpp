#include "ellh/job.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include "ellh/errors.hpp"
#include "ellh/factorint.hpp"
#include "ellh/global_height.hpp"
#include "ellh/padic_place.hpp"
#include "ellh/real_place.hpp"

namespace ellh {

using nlohmann::json;

namespace {

struct ParsedJob {
    WeierstrassCurve curve;
    CurvePoint point;
    bool global = false;
    bool real = false;
    unsigned long prime = 0;
};

ParsedJob parse_job(const JobSpec& spec) {
    ParsedJob out;
    std::array<Rat, 5> a;
    for (std::size_t i = 0; i < 5; ++i)
        a[i] = rat_from_string(spec.curve[i]);
    out.curve = WeierstrassCurve::create(a[0], a[1], a[2], a[3], a[4]);
    out.point = CurvePoint::affine(rat_from_string(spec.point[0]),
                                   rat_from_string(spec.point[1]));
    if (!(spec.tol > 0))
        throw Error("tol must be positive");
    if (spec.place == "global") {
        out.global = true;
    } else if (spec.place == "real") {
        out.real = true;
    } else if (spec.place.rfind("p:", 0) == 0) {
        Rat p = rat_from_string(spec.place.substr(2));
        if (!rat_is_integer(p) || p < 2 || !Int(p.get_num()).fits_ulong_p())
            throw NotPrimeError("place must name a prime: " + spec.place);
        if (!is_probable_prime(Int(p.get_num())))
            throw NotPrimeError(spec.place.substr(2) + " is not prime");
        out.prime = Int(p.get_num()).get_ui();
    } else {
        throw Error("unknown place: " + spec.place + " (expected real, p:<prime>, global)");
    }
    return out;
}

json trace_to_json(const IterationTrace& tr) {
    json steps = json::array();
    for (const TraceStep& s : tr.steps)
        steps.push_back({{"n", s.n}, {"t", s.t}, {"W", s.w}, {"Z", s.z},
                         {"log_abs_Z", s.log_abs_z}});
    return {{"steps", steps},
            {"observed_log_bound", tr.observed_log_bound},
            {"observed_t_bound", tr.observed_t_bound}};
}

json real_result_to_json(const LocalHeightResult& r, bool want_trace) {
    json doc = {
        {"status", "ok"},
        {"place", "real"},
        {"lambda", r.lambda},
        {"mu", r.mu},
        {"exact", false},
        {"iterations", r.iterations},
        {"error_bound", r.truncation_error_bound},
        {"certificate",
         {{"r", r.shift_used},
          {"reason", gamma_kind_name(r.certificate.kind)},
          {"witness", r.shift_witness}}},
    };
    if (want_trace && r.trace)
        doc["trace"] = trace_to_json(*r.trace);
    return doc;
}

json padic_result_to_json(const PadicHeightResult& r, unsigned long p, bool want_trace) {
    double logp = std::log(static_cast<double>(p));
    json doc = {
        {"status", "ok"},
        {"place", "p:" + std::to_string(p)},
        {"prime", p},
        {"coefficient", rat_to_string(r.coefficient)},
        {"log_p", logp},
        {"lambda", r.coefficient.get_d() * logp},
        {"exact", r.exact},
        {"iterations", r.iterations},
        {"error_bound", r.tail_bound_coefficient.get_d() * logp},
        {"certificate",
         {{"r", r.certificate.r},
          {"reason", r.certificate.reason},
          {"witness", rat_to_string(r.certificate.witness)}}},
    };
    if (want_trace)
        doc["valuation_trace"] = r.valuation_trace;
    return doc;
}

json global_result_to_json(const GlobalHeightResult& r) {
    json finite = json::object();
    for (const auto& [p, c] : r.finite_parts)
        finite[std::to_string(p)] = rat_to_string(c);
    json doc = {
        {"status", "ok"},
        {"place", "global"},
        {"total", r.total},
        {"archimedean", r.archimedean},
        {"finite_parts", finite},
        {"error_bound", r.error_bound},
    };
    if (r.torsion_order)
        doc["torsion_order"] = *r.torsion_order;
    return doc;
}

int classify_error(const std::exception& e) {
    if (dynamic_cast<const PrecisionExhaustedError*>(&e) ||
        dynamic_cast<const FactorizationOverflowError*>(&e) ||
        dynamic_cast<const NoAdmissibleShiftError*>(&e) ||
        dynamic_cast<const RootIsolationError*>(&e) ||
        dynamic_cast<const ZVanishedError*>(&e))
        return 3;
    return 2;
}

} // namespace

JobSpec jobspec_from_json(const json& j) {
    JobSpec spec;
    const auto& curve = j.at("curve");
    const auto& point = j.at("point");
    if (!curve.is_array() || curve.size() != 5)
        throw Error("curve must be an array of 5 rational strings");
    if (!point.is_array() || point.size() != 2)
        throw Error("point must be an array of 2 rational strings");
    for (std::size_t i = 0; i < 5; ++i)
        spec.curve[i] = curve[i].get<std::string>();
    for (std::size_t i = 0; i < 2; ++i)
        spec.point[i] = point[i].get<std::string>();
    spec.place = j.value("place", std::string("global"));
    spec.tol = j.value("tol", 1e-12);
    if (j.contains("n_max"))
        spec.n_max = j.at("n_max").get<int>();
    spec.trace = j.value("trace", false);
    return spec;
}

JobOutcome run_job(const JobSpec& spec) {
    try {
        ParsedJob job = parse_job(spec);
        if (job.real) {
            RealOptions opts;
            opts.tol = spec.tol;
            opts.n_max = spec.n_max.value_or(64);
            opts.want_trace = spec.trace;
            return {0, real_result_to_json(lambda_real(job.curve, job.point, opts),
                                           spec.trace)};
        }
        if (job.prime != 0) {
            PadicOptions opts;
            opts.n_max = spec.n_max.value_or(40);
            return {0, padic_result_to_json(lambda_padic(job.curve, job.point, job.prime, opts),
                                            job.prime, spec.trace)};
        }
        GlobalOptions opts;
        opts.tol = spec.tol;
        if (spec.n_max) {
            opts.real_n_max = *spec.n_max;
            opts.padic_n_max = *spec.n_max;
        }
        return {0, global_result_to_json(canonical_height(job.curve, job.point, opts))};
    } catch (const std::exception& e) {
        int code = classify_error(e);
        return {code, json{{"status", "error"}, {"error", e.what()}, {"code", code}}};
    }
}

int run_batch(std::istream& in, std::ostream& out) {
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        json doc;
        try {
            JobSpec spec = jobspec_from_json(json::parse(line));
            doc = run_job(spec).doc;
        } catch (const std::exception& e) {
            doc = json{{"status", "error"}, {"error", e.what()}, {"code", 2}};
        }
        doc["line"] = lineno;
        out << doc.dump() << "\n";
        if (!out)
            return 4;
    }
    if (in.bad())
        return 4;
    return 0;
}

} // namespace ellh
