// ellheight: local and global canonical heights on elliptic curves over Q.
//
//   ellheight --curve 0,0,0,0,-2 --point 3,5 --place real
//   ellheight --curve 0,0,0,0,-2 --point 3,5 --place p:5
//   ellheight --curve 0,0,0,0,-2 --point 3,5 --place global
//   ellheight --batch jobs.jsonl
//
// Exit codes: 0 success, 2 domain error (singular curve, point off curve,
// bad place), 3 resource error (precision/factorization limits), 4 batch
// I/O failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "ellh/job.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(item);
    return out;
}

void print_human(const nlohmann::json& doc, std::ostream& os) {
    if (doc.value("status", "") == "error") {
        os << "error: " << doc.value("error", "?") << "\n";
        return;
    }
    const std::string place = doc.value("place", "?");
    if (place == "real") {
        os << "lambda_real = " << doc["lambda"].get<double>() << "  (iterations "
           << doc["iterations"].get<int>() << ", error bound "
           << doc["error_bound"].get<double>() << ")\n";
    } else if (place == "global") {
        os << "canonical height = " << doc["total"].get<double>() << "  (archimedean "
           << doc["archimedean"].get<double>() << ", error bound "
           << doc["error_bound"].get<double>() << ")\n";
        for (auto& [p, c] : doc["finite_parts"].items())
            os << "  lambda_" << p << " = " << c.get<std::string>() << " * log " << p << "\n";
        if (doc.contains("torsion_order"))
            os << "  torsion point of order " << doc["torsion_order"].get<int>() << "\n";
    } else {
        os << "lambda_" << doc["prime"].get<unsigned long>() << " = "
           << doc["coefficient"].get<std::string>() << " * log "
           << doc["prime"].get<unsigned long>()
           << (doc["exact"].get<bool>() ? "  (exact)" : "  (truncated)") << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"local and global canonical heights on elliptic curves over Q"};

    std::string curve_arg, point_arg, place = "global", batch_path;
    double tol = 1e-12;
    int max_iter = -1;
    bool trace = false;
    bool json_out = true;

    app.add_option("--curve", curve_arg, "a1,a2,a3,a4,a6 as rationals (n or n/d)");
    app.add_option("--point", point_arg, "x,y as rationals");
    app.add_option("--place", place, "real | p:<prime> | global")
        ->capture_default_str();
    app.add_option("--tol", tol, "archimedean stopping tolerance")->capture_default_str();
    app.add_option("--max-iter", max_iter, "series iteration cap (default 64 real / 40 p-adic)");
    app.add_flag("--trace", trace, "include the per-step iteration trace");
    app.add_flag("--json,!--no-json", json_out, "emit JSON (default) or a text summary");
    app.add_option("--batch", batch_path, "JSONL job file; one result line per input line");

    CLI11_PARSE(app, argc, argv);

    if (!batch_path.empty()) {
        std::ifstream in(batch_path);
        if (!in) {
            std::cerr << "ellheight: cannot open " << batch_path << "\n";
            return 4;
        }
        return ellh::run_batch(in, std::cout);
    }

    std::vector<std::string> a = split_commas(curve_arg);
    std::vector<std::string> xy = split_commas(point_arg);
    if (a.size() != 5 || xy.size() != 2) {
        std::cerr << "ellheight: --curve needs 5 comma-separated rationals and "
                     "--point needs 2\n";
        return 2;
    }

    ellh::JobSpec spec;
    for (int i = 0; i < 5; ++i)
        spec.curve[i] = a[i];
    spec.point = {xy[0], xy[1]};
    spec.place = place;
    spec.tol = tol;
    if (max_iter > 0)
        spec.n_max = max_iter;
    spec.trace = trace;

    ellh::JobOutcome outcome = ellh::run_job(spec);
    if (outcome.exit_code != 0) {
        std::cerr << "ellheight: " << outcome.doc.value("error", "unknown error") << "\n";
        return outcome.exit_code;
    }
    if (json_out)
        std::cout << outcome.doc.dump() << "\n";
    else
        print_human(outcome.doc, std::cout);
    return 0;
}
