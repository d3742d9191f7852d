#pragma once

#include <string>
#include <vector>

#include "evofs/dataset.hpp"

namespace evofs {

// Principal components of a dataset's feature matrix, fitted through the
// singular value decomposition of the centered data.
struct PcaModel {
    std::vector<double> means;                     // n column means
    std::vector<std::vector<double>> components;   // r components, each an n-vector
    std::vector<double> explained_variance;        // r values, non-increasing

    std::size_t n() const { return means.size(); }
    std::size_t r() const { return components.size(); }

    /// Flat text layout: n r, means, components row-major, variances.
    void save(const std::string& path) const;
    static PcaModel load(const std::string& path);
};

PcaModel pca_fit(const Dataset& ds, std::size_t r);

/// Projects (X - means) onto the components; labels carry through unchanged.
Dataset pca_transform(const PcaModel& model, const Dataset& ds);

/// Maps transformed rows back to the original space (for reconstruction
/// error checks): X_hat = Y * components^T + means.
std::vector<std::vector<double>> pca_inverse_transform(const PcaModel& model,
                                                       const Dataset& transformed);

}  // namespace evofs
