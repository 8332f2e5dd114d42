#pragma once

// Invariant suite behind `accelramsey selfcheck`.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace accelramsey {

struct CheckOutcome {
    std::string name;
    bool passed = false;
    double value = 0.0;      // worst observed error
    double tolerance = 0.0;
    std::string detail;
};

/// Closed-form-vs-reference discrepancies; reported, never failures.
struct Finding {
    std::string name;
    std::string summary;
    nlohmann::json data;
};

struct SelfcheckReport {
    std::vector<CheckOutcome> checks;
    std::vector<Finding> findings;

    bool ok() const noexcept;
    nlohmann::json to_json() const;
};

struct SelfcheckOptions {
    /// Replaces every hard tolerance (test hook).
    std::optional<double> tolerance_override;
    /// Grid size for the figure sweeps.
    int sweep_points = 60;
};

SelfcheckReport run_selfcheck(const SelfcheckOptions& options = {});

}  // namespace accelramsey
