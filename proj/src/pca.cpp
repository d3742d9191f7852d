#include "evofs/pca.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "evofs/io.hpp"

namespace evofs {

PcaModel pca_fit(const Dataset& ds, std::size_t r) {
    const std::size_t n = ds.cols;
    const std::size_t rows = ds.rows;
    if (r == 0 || r > std::min(n, rows))
        throw std::invalid_argument("pca_fit: r must lie in [1, min(n, rows)]");

    Eigen::MatrixXd x(rows, n);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < n; ++j) x(static_cast<Eigen::Index>(i),
                                              static_cast<Eigen::Index>(j)) = ds.at(i, j);
    const Eigen::RowVectorXd means = x.colwise().mean();
    x.rowwise() -= means;

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(x, Eigen::ComputeThinV);
    const auto& singular = svd.singularValues();
    const auto& v = svd.matrixV();

    PcaModel model;
    model.means.assign(means.data(), means.data() + n);
    model.components.resize(r, std::vector<double>(n));
    model.explained_variance.resize(r);
    const double denom = rows > 1 ? static_cast<double>(rows - 1) : 1.0;
    for (std::size_t c = 0; c < r; ++c) {
        Eigen::VectorXd col = v.col(static_cast<Eigen::Index>(c));
        // sign convention: largest-magnitude entry positive, so serialized
        // models are stable across SVD backends
        Eigen::Index peak = 0;
        col.cwiseAbs().maxCoeff(&peak);
        if (col(peak) < 0.0) col = -col;
        for (std::size_t j = 0; j < n; ++j) model.components[c][j] = col(static_cast<Eigen::Index>(j));
        const double s = singular(static_cast<Eigen::Index>(c));
        model.explained_variance[c] = s * s / denom;
    }
    return model;
}

Dataset pca_transform(const PcaModel& model, const Dataset& ds) {
    if (ds.cols != model.n()) throw std::invalid_argument("pca_transform: dimension mismatch");
    Dataset out;
    out.rows = ds.rows;
    out.cols = model.r();
    out.values.resize(out.rows * out.cols);
    for (std::size_t i = 0; i < ds.rows; ++i) {
        for (std::size_t c = 0; c < model.r(); ++c) {
            double acc = 0.0;
            for (std::size_t j = 0; j < ds.cols; ++j)
                acc += (ds.at(i, j) - model.means[j]) * model.components[c][j];
            out.at(i, c) = acc;
        }
    }
    out.labels = ds.labels;
    out.label_names = ds.label_names;
    for (std::size_t c = 0; c < model.r(); ++c) out.feature_names.push_back("pc" + std::to_string(c));
    out.source = ds.source;
    out.transform_log = ds.transform_log;
    out.transform_log.push_back("pca_transform(r=" + std::to_string(model.r()) + ")");
    return out;
}

std::vector<std::vector<double>> pca_inverse_transform(const PcaModel& model,
                                                       const Dataset& transformed) {
    if (transformed.cols != model.r())
        throw std::invalid_argument("pca_inverse_transform: dimension mismatch");
    std::vector<std::vector<double>> out(transformed.rows, std::vector<double>(model.n()));
    for (std::size_t i = 0; i < transformed.rows; ++i)
        for (std::size_t j = 0; j < model.n(); ++j) {
            double acc = model.means[j];
            for (std::size_t c = 0; c < model.r(); ++c)
                acc += transformed.at(i, c) * model.components[c][j];
            out[i][j] = acc;
        }
    return out;
}

void PcaModel::save(const std::string& path) const {
    std::ostringstream out;
    out << n() << ' ' << r() << '\n';
    for (std::size_t j = 0; j < n(); ++j)
        out << format_double(means[j], 17) << (j + 1 == n() ? '\n' : ' ');
    for (const auto& comp : components) {
        for (std::size_t j = 0; j < n(); ++j)
            out << format_double(comp[j], 17) << (j + 1 == n() ? '\n' : ' ');
    }
    for (std::size_t c = 0; c < r(); ++c)
        out << format_double(explained_variance[c], 17) << (c + 1 == r() ? '\n' : ' ');
    write_file_atomic(path, out.str());
}

PcaModel PcaModel::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("pca: cannot open " + path);
    std::size_t n = 0, r = 0;
    if (!(in >> n >> r)) throw std::runtime_error("pca: malformed model header in " + path);
    PcaModel model;
    model.means.resize(n);
    for (auto& v : model.means) in >> v;
    model.components.resize(r, std::vector<double>(n));
    for (auto& comp : model.components)
        for (auto& v : comp) in >> v;
    model.explained_variance.resize(r);
    for (auto& v : model.explained_variance) in >> v;
    if (!in) throw std::runtime_error("pca: truncated model file " + path);
    return model;
}

}  // namespace evofs
