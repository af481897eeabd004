#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/entropy.hpp"
#include "twistlab/knum.hpp"
#include "twistlab/zoo.hpp"

namespace twistlab {

/// Bad command-line configuration or input file (exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string instance;      // zoo name, or empty with algebra_path
    std::string algebra_path;  // JSON algebra file
    std::string functor;       // empty: the instance default
    double tmin = -1.0;
    double tmax = 1.0;
    double tstep = 0.5;
    int n_max = 10;
    int tail_k = 4;
    char field = 0;  // 'p' prime field, 'q' rationals, 0: prime for instances, the file's field otherwise
    std::string csv_path;
    std::string svg_path;
    std::uint64_t seed = 0;

    /// Throws ConfigError: grid step <= 0, tmin > tmax, n_max < 4, etc.
    void check() const;
    std::vector<double> grid() const;
};

/// Everything derived from a RunConfig before any iteration.
struct Setup {
    AlgebraPtr algebra;
    EndofunctorSpec phi;
    std::string word;
    /// Present when phi is a single twist along an object with the End
    /// cohomology of a spherical or P-object (dimension-checked).
    std::optional<ModelSphericalFunctor> model;
    std::string model_note;
    std::optional<std::string> kernel_witness;  // label of a projective F with Hom*(E, F) = 0
    bool split_generator = false;               // split_gen_criterion for the model
};

Setup resolve(const RunConfig& config);

struct EntropyRow {
    double t = 0.0;
    int n = 0;
    double eps = 0.0;
    std::optional<double> h_tailfit;
    std::optional<double> h_fekete;
    std::optional<double> cert_upper;
    std::optional<double> lower;
    std::optional<double> upper;
    std::string verdict;
};

struct EntropySummary {
    double t = 0.0;
    std::optional<EntropyEstimate> estimate;
    std::optional<Envelope> envelope;
    /// (1/n) log of the certificate value at n = n_max: a rigorous upper
    /// bound for h_t since log delta_t(G, T^n G) is subadditive in n.
    std::optional<double> cert_upper;
    Verdict verdict = Verdict::incomplete;
    std::string note;
};

struct EntropyReport {
    Setup setup;
    RunConfig config;
    std::vector<EntropyRow> rows;
    std::vector<EntropySummary> summaries;
    bool incomplete = false;
    std::string note;
    double seconds = 0.0;
};

EntropyReport run_entropy(const RunConfig& config);
std::string entropy_csv(const EntropyReport& report);
/// Self-contained line chart of the estimates, envelope and certificate bound.
std::string entropy_svg(const EntropyReport& report);

enum class CheckStatus { pass, fail, hypothesis_not_met };
std::string to_string(CheckStatus s);

struct CheckLine {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string hypotheses;  // "machine-checked", "dimension-checked" or "assumed", with details
    std::string detail;
};

struct VerifyReport {
    std::string instance;
    std::vector<CheckLine> lines;
    bool any_fail() const;
};

VerifyReport run_verify(const std::string& instance, int n_max = 20, char field = 'p');
std::string format_verify(const VerifyReport& report);

/// chi, functor matrix, spectrum, numerical group and verdicts as JSON text.
std::string ktheory_report(const std::string& instance, const std::string& functor, int n_max = 10);

// Command entry points: return the process exit code.
int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_entropy(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& instance, int n_max, std::ostream& out, std::ostream& err);
int cmd_ktheory(const std::string& instance, const std::string& functor, std::ostream& out, std::ostream& err);
int cmd_zoo_list(std::ostream& out);
int cmd_zoo_emit(const std::string& name, std::ostream& out, std::ostream& err);

}  // namespace twistlab
