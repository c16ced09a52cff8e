#include "upmsp/regression.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <Eigen/Dense>
#include <json.hpp>

namespace upmsp {

std::array<double, kNumTerms> design_row(double M, double J, double S,
                                         double t, double sx) {
    if (!std::isfinite(M) || !std::isfinite(J) || !std::isfinite(S) ||
        !std::isfinite(t) || !std::isfinite(sx))
        throw std::invalid_argument("non-finite feature");
    double tc = std::clamp(t, kTMin, 1.0);
    double tp = std::log10(tc);
    double sxp = std::log10(std::max(sx, 1.0));
    return {1.0,     M,       J,       S,      tp,      sxp,
            tp * tp, M * M,   J * J,   S * S,  sxp * sxp,
            J * tp,  J * M,   J * S,   M * S,  M * sxp};
}

DesignMatrix build_design(const std::vector<EnumerationEvent>& events,
                          Neighbourhood id) {
    DesignMatrix out;
    int slot = static_cast<int>(id);
    for (const auto& e : events) {
        const auto& st = e.stats[slot];
        if (st.id != id)
            throw FitError("telemetry stats out of order");
        if (st.expected_utility <= 0.0) {
            ++out.dropped_zero_utility;
            continue;
        }
        out.rows.push_back(design_row(e.M, e.J, static_cast<double>(e.S), e.t,
                                      static_cast<double>(e.spt)));
        out.response.push_back(std::log10(st.expected_utility));
    }
    return out;
}

UtilityModel fit_ols(const DesignMatrix& design, Neighbourhood id,
                     RankPolicy rank_policy) {
    const long long n = static_cast<long long>(design.rows.size());
    if (n < kNumTerms)
        throw FitError(std::string("fit infeasible for ") + name_of(id) +
                       ": need at least 16 rows with positive utility, got " +
                       std::to_string(n));

    Eigen::MatrixXd X(n, kNumTerms);
    Eigen::VectorXd y(n);
    for (long long i = 0; i < n; ++i) {
        for (int c = 0; c < kNumTerms; ++c) X(i, c) = design.rows[i][c];
        y(i) = design.response[i];
    }

    // Standardise the non-intercept columns; constant columns are folded
    // into the intercept and get a zero coefficient.
    std::vector<int> active;
    Eigen::VectorXd mean = X.colwise().mean();
    Eigen::VectorXd sd = Eigen::VectorXd::Zero(kNumTerms);
    for (int c = 1; c < kNumTerms; ++c) {
        double var = (X.col(c).array() - mean(c)).square().sum() /
                     static_cast<double>(n);
        sd(c) = std::sqrt(var);
        if (sd(c) > 0.0) active.push_back(c);
    }

    double ymean = y.mean();
    Eigen::VectorXd yc = y.array() - ymean;
    Eigen::MatrixXd Z(n, active.size());
    for (std::size_t a = 0; a < active.size(); ++a)
        Z.col(a) = (X.col(active[a]).array() - mean(active[a])) / sd(active[a]);

    UtilityModel model;
    model.id = id;
    model.rows = n;

    if (!active.empty()) {
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Z);
        qr.setThreshold(1e-10);
        Eigen::Index rank = qr.rank();
        auto perm = qr.colsPermutation().indices();
        if (rank < static_cast<Eigen::Index>(active.size())) {
            std::string bad;
            for (Eigen::Index i = rank; i < perm.size(); ++i) {
                if (!bad.empty()) bad += ", ";
                bad += kTermNames[active[perm(i)]];
            }
            if (rank_policy == RankPolicy::Strict)
                throw FitError(std::string("singular fit for ") + name_of(id) +
                               "; dependent columns: " + bad);
            // refit on the independent pivot columns only
            std::vector<int> kept;
            for (Eigen::Index i = 0; i < rank; ++i)
                kept.push_back(active[perm(i)]);
            for (Eigen::Index i = rank; i < perm.size(); ++i)
                model.dropped_terms.push_back(kTermNames[active[perm(i)]]);
            std::sort(kept.begin(), kept.end());
            std::sort(model.dropped_terms.begin(), model.dropped_terms.end());
            Eigen::MatrixXd Zk(n, kept.size());
            for (std::size_t a = 0; a < kept.size(); ++a)
                Zk.col(a) =
                    (X.col(kept[a]).array() - mean(kept[a])) / sd(kept[a]);
            Eigen::VectorXd coef =
                Zk.colPivHouseholderQr().solve(yc);
            for (std::size_t a = 0; a < kept.size(); ++a)
                model.beta[kept[a]] = coef(a) / sd(kept[a]);
        } else {
            Eigen::VectorXd coef = qr.solve(yc);
            for (std::size_t a = 0; a < active.size(); ++a)
                model.beta[active[a]] = coef(a) / sd(active[a]);
        }
    }
    double b0 = ymean;
    for (int c = 1; c < kNumTerms; ++c) b0 -= model.beta[c] * mean(c);
    model.beta[0] = b0;

    Eigen::VectorXd fitted = Eigen::VectorXd::Constant(n, model.beta[0]);
    for (int c = 1; c < kNumTerms; ++c)
        if (model.beta[c] != 0.0) fitted += model.beta[c] * X.col(c);
    Eigen::VectorXd resid = y - fitted;
    model.rss = resid.squaredNorm();
    double tss = (y.array() - ymean).square().sum();
    model.r2 = tss > 0.0 ? 1.0 - model.rss / tss : 1.0;
    return model;
}

double predict_log_utility(const UtilityModel& model, double M, double J,
                           double S, double t, double sx) {
    auto row = design_row(M, J, S, t, sx);
    double out = 0.0;
    for (int c = 0; c < kNumTerms; ++c) out += model.beta[c] * row[c];
    return out;
}

namespace {
using ordered_json = nlohmann::ordered_json;
}

void save_models(const std::array<UtilityModel, kNumNeighbourhoods>& models,
                 const std::filesystem::path& path) {
    ordered_json arr = ordered_json::array();
    for (const auto& m : models) {
        ordered_json j;
        j["id"] = name_of(m.id);
        ordered_json beta;
        for (int c = 0; c < kNumTerms; ++c) beta[kTermNames[c]] = m.beta[c];
        j["beta"] = std::move(beta);
        j["rows"] = m.rows;
        j["rss"] = m.rss;
        j["r2"] = m.r2;
        arr.push_back(std::move(j));
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write model file: " + path.string());
    out << arr.dump(2) << '\n';
}

std::array<UtilityModel, kNumNeighbourhoods> load_models(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open model file: " + path.string());
    ordered_json arr = ordered_json::parse(in);
    if (!arr.is_array() || arr.size() != kNumNeighbourhoods)
        throw std::runtime_error("model file must hold exactly 6 models");
    std::array<UtilityModel, kNumNeighbourhoods> models;
    std::array<bool, kNumNeighbourhoods> seen{};
    for (const auto& j : arr) {
        auto id = neighbourhood_from_name(j.at("id").get<std::string>());
        if (!id) throw std::runtime_error("unknown neighbourhood in model file");
        UtilityModel m;
        m.id = *id;
        for (int c = 0; c < kNumTerms; ++c)
            m.beta[c] = j.at("beta").at(kTermNames[c]).get<double>();
        m.rows = j.at("rows").get<long long>();
        m.rss = j.at("rss").get<double>();
        m.r2 = j.at("r2").get<double>();
        models[static_cast<int>(*id)] = m;
        seen[static_cast<int>(*id)] = true;
    }
    for (bool s : seen)
        if (!s) throw std::runtime_error("model file misses a neighbourhood");
    return models;
}

}  // namespace upmsp
