#include "evtail/calibration.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace evtail {

std::string to_string(TestKind kind) {
    return kind == TestKind::thin_tail ? "thin_tail" : "equal_tail";
}

TestKind test_kind_from_string(const std::string& s) {
    if (s == "thin_tail" || s == "thin") return TestKind::thin_tail;
    if (s == "equal_tail" || s == "equal") return TestKind::equal_tail;
    throw std::invalid_argument("unknown test kind: " + s);
}

std::string CalibrationArtifact::id() const {
    std::ostringstream os;
    os << (kind == TestKind::thin_tail ? "thin" : "equal") << "/k=" << k
       << "/alpha=" << alpha << "/v" << version << "/seed=" << seed;
    return os.str();
}

WeightGrid CalibrationArtifact::weight_grid() const {
    WeightGrid g;
    g.points = grid_points;
    g.masses.assign(grid_points.size(), 1.0 / static_cast<double>(grid_points.size()));
    return g;
}

LeastFavorableDistribution CalibrationArtifact::lfd() const {
    if (kind != TestKind::equal_tail || !lambda_masses) {
        throw std::logic_error("artifact carries no least-favorable distribution");
    }
    LeastFavorableDistribution l;
    l.grid.points = grid_points;
    l.grid.masses = *lambda_masses;
    l.cv = cv;
    return l;
}

std::string serialize(const CalibrationArtifact& a) {
    nlohmann::json j;
    j["version"] = a.version;
    j["kind"] = to_string(a.kind);
    j["k"] = a.k;
    j["alpha"] = a.alpha;
    j["grid_points"] = a.grid_points;
    if (a.lambda_masses) j["lambda_masses"] = *a.lambda_masses;
    j["cv"] = a.cv;
    j["mc_draws"] = a.mc_draws;
    j["seed"] = a.seed;
    return j.dump(2) + "\n";
}

CalibrationArtifact parse_artifact(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CalibrationArtifact a;
    a.version = j.at("version").get<int>();
    a.kind = test_kind_from_string(j.at("kind").get<std::string>());
    a.k = j.at("k").get<int>();
    a.alpha = j.at("alpha").get<double>();
    a.cv = j.at("cv").get<double>();
    a.grid_points = j.at("grid_points").get<std::vector<double>>();
    if (j.contains("lambda_masses")) {
        a.lambda_masses = j.at("lambda_masses").get<std::vector<double>>();
    }
    a.mc_draws = j.at("mc_draws").get<std::int64_t>();
    a.seed = j.at("seed").get<std::uint64_t>();
    return a;
}

std::string artifact_filename(const CalibrationArtifact& a) {
    std::ostringstream os;
    os << (a.kind == TestKind::thin_tail ? "thin" : "equal") << "_k" << a.k
       << "_alpha" << a.alpha << "_v" << a.version << ".json";
    return os.str();
}

}  // namespace evtail
