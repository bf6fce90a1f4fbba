#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace restab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

enum class ErrorCode {
    NonFinite,
    ShapeMismatch,
    NotPreprocessed,
    NonPositivePrecision,
    NumericalBreakdown,
    SingularMatrix,
    NotConverged,
    DegenerateColumn,
    TooFewSamples,
    DimensionGuard,
    BadShape,
    ParseError,
    RaggedRows,
    InvalidArgument,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::NotPreprocessed: return "NotPreprocessed";
        case ErrorCode::NonPositivePrecision: return "NonPositivePrecision";
        case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NotConverged: return "NotConverged";
        case ErrorCode::DegenerateColumn: return "DegenerateColumn";
        case ErrorCode::TooFewSamples: return "TooFewSamples";
        case ErrorCode::DimensionGuard: return "DimensionGuard";
        case ErrorCode::BadShape: return "BadShape";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::RaggedRows: return "RaggedRows";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Regression data (M observations, N features) plus preprocessing state.
struct Dataset {
    Matrix features;       // M x N
    Vector outputs;        // length M
    bool preprocessed = false;
    std::string provenance;  // "synthetic" | "csv" | free text

    Index m() const { return features.rows(); }
    Index n() const { return features.cols(); }
};

/// Poisson-bootstrap resampling model: occupation counts c_mu ~ Poisson(tau),
/// tau = M_B / M. The oracle can also sample the exact multinomial.
struct BootstrapSpec {
    enum class OracleMode { Poisson, Multinomial };

    double tau = 0.5;
    double tail_tol = 1e-12;
    OracleMode oracle_mode = OracleMode::Poisson;
};

/// Per-coordinate penalty distribution: lambda_i = base * multiplier with the
/// multiplier drawn from `atoms`. Default is the two-point stability-selection
/// choice {lambda, 2 lambda} with equal weight.
struct PenaltySpec {
    struct Atom {
        double multiplier;
        double weight;
    };

    double base = 1.0;
    std::vector<Atom> atoms{{1.0, 0.5}, {2.0, 0.5}};

    static PenaltySpec point_mass(double lambda) {
        PenaltySpec p;
        p.base = lambda;
        p.atoms = {{1.0, 1.0}};
        return p;
    }

    static PenaltySpec two_point(double lambda) {
        PenaltySpec p;
        p.base = lambda;
        return p;
    }

    void validate() const {
        if (base <= 0.0) throw Error(ErrorCode::InvalidArgument, "penalty base must be > 0");
        if (atoms.empty()) throw Error(ErrorCode::InvalidArgument, "penalty atoms empty");
        double wsum = 0.0;
        for (const auto& a : atoms) {
            if (a.multiplier <= 0.0)
                throw Error(ErrorCode::InvalidArgument, "penalty multiplier must be > 0");
            if (a.weight < 0.0)
                throw Error(ErrorCode::InvalidArgument, "penalty weight must be >= 0");
            wsum += a.weight;
        }
        if (std::abs(wsum - 1.0) > 1e-12)
            throw Error(ErrorCode::InvalidArgument, "penalty weights must sum to 1");
    }
};

struct RvampConfig {
    double delta_tol = 1e-12;
    int max_iter = 500;
    double damping = 1.0;      // 1 = undamped; 0.5 recommended for correlated designs
    double q_floor = 1e-12;    // lower clip for reflected precisions
    std::uint64_t seed = 0;

    void validate() const {
        if (delta_tol <= 0.0) throw Error(ErrorCode::InvalidArgument, "delta_tol must be > 0");
        if (max_iter < 1) throw Error(ErrorCode::InvalidArgument, "max_iter must be >= 1");
        if (damping <= 0.0 || damping > 1.0)
            throw Error(ErrorCode::InvalidArgument, "damping must be in (0,1]");
        if (q_floor <= 0.0) throw Error(ErrorCode::InvalidArgument, "q_floor must be > 0");
    }

    // Upper clip paired with q_floor; keeps pinned-coordinate precisions finite.
    double q_cap() const { return 1.0 / q_floor; }
};

/// Full rVAMP message set. Side 1 faces the separable denoisers, side 2 the
/// Gaussian (LMMSE) stage. Derived moments are stored unclipped.
struct MessageState {
    // side-1 messages
    Vector r1x, qh1x, chh1x;   // length N
    Vector r1u, qh1u, chh1u;   // length M
    // side-2 messages
    Vector r2x, qh2x, chh2x;   // length N
    Vector r2u, qh2u, chh2u;   // length M
    // denoiser-side moments
    Vector xhat1, v1x, chi1x;  // length N
    Vector uhat1, v1u, chi1u;  // length M
    // LMMSE-side moments
    Vector xhat2, v2x, chi2x;  // length N
    Vector uhat2, v2u, chi2u;  // length M

    Index n() const { return r1x.size(); }
    Index m() const { return r1u.size(); }
};

enum class StatsMethod { Rvamp, Naive };

inline const char* stats_method_name(StatsMethod m) {
    return m == StatsMethod::Rvamp ? "rvamp" : "naive";
}

/// Per-coordinate bootstrap statistics of the estimator.
struct ResamplingStatistics {
    Vector mean;
    Vector variance;
    Vector pi;                 // selection probability Prob[xhat_i != 0]
    // Monte-Carlo standard errors (naive oracle only; empty otherwise).
    Vector mc_std_err_mean;
    Vector mc_std_err_variance;
    Vector mc_std_err_pi;
    StatsMethod method = StatsMethod::Rvamp;
    std::vector<std::pair<std::string, std::string>> meta;

    Index n() const { return mean.size(); }
};

struct TraceRecord {
    int iteration;     // 1-based
    double delta;
    double elapsed_s;  // since run start
};

using ConvergenceTrace = std::vector<TraceRecord>;

inline bool all_finite(const Vector& v) { return v.allFinite(); }
inline bool all_finite(const Matrix& m) { return m.allFinite(); }

/// Checks the Dataset invariants; throws the first violated one.
inline void validate_dataset(const Dataset& d) {
    if (d.m() < 2 || d.n() < 1)
        throw Error(ErrorCode::ShapeMismatch,
                    "need M >= 2 and N >= 1, got M=" + std::to_string(d.m()) +
                        " N=" + std::to_string(d.n()));
    if (d.outputs.size() != d.m())
        throw Error(ErrorCode::ShapeMismatch, "outputs length does not match feature rows");
    if (!all_finite(d.features) || !all_finite(d.outputs))
        throw Error(ErrorCode::NonFinite, "dataset contains non-finite entries");
    if (d.preprocessed) {
        const double tol = 1e-10;
        for (Index j = 0; j < d.n(); ++j) {
            const auto col = d.features.col(j);
            if (std::abs(col.mean()) > tol)
                throw Error(ErrorCode::NotPreprocessed,
                            "column " + std::to_string(j) + " is not centered");
            if (std::abs(col.norm() - 1.0) > tol)
                throw Error(ErrorCode::NotPreprocessed,
                            "column " + std::to_string(j) + " is not unit-norm");
        }
        if (std::abs(d.outputs.mean()) > tol)
            throw Error(ErrorCode::NotPreprocessed, "outputs are not centered");
    }
}

}  // namespace restab
