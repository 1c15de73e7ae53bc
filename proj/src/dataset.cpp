#include "ucc/dataset.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

#include "ucc/errors.hpp"

namespace ucc {

namespace {

[[noreturn]] void throw_at(ErrorCode code, std::size_t index, const std::string& what) {
    std::ostringstream msg;
    msg << error_name(code) << " at record " << index << ": " << what;
    throw Error(code, msg.str(), static_cast<long>(index));
}

void check_record(std::size_t i, double y, double y_hat, double zl, double zu) {
    if (!std::isfinite(y)) throw_at(ErrorCode::NonFiniteValue, i, "y is not finite");
    if (!std::isfinite(y_hat)) throw_at(ErrorCode::NonFiniteValue, i, "y_hat is not finite");
    if (!std::isfinite(zl)) throw_at(ErrorCode::NonFiniteValue, i, "z_lower is not finite");
    if (!std::isfinite(zu)) throw_at(ErrorCode::NonFiniteValue, i, "z_upper is not finite");
    if (zl < 0.0) throw_at(ErrorCode::NegativeBand, i, "z_lower is negative");
    if (zu < 0.0) throw_at(ErrorCode::NegativeBand, i, "z_upper is negative");
}

}  // namespace

ErrorClass classify(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyDataset:
        case ErrorCode::NonFiniteValue:
        case ErrorCode::NegativeBand:
        case ErrorCode::LengthMismatch:
        case ErrorCode::BoundOrderViolation:
        case ErrorCode::ParseError:
        case ErrorCode::MissingColumn:
        case ErrorCode::FileNotFound:
            return ErrorClass::ingestion;
        default:
            return ErrorClass::computation;
    }
}

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyDataset: return "EmptyDataset";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::NegativeBand: return "NegativeBand";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::BoundOrderViolation: return "BoundOrderViolation";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::MissingColumn: return "MissingColumn";
        case ErrorCode::FileNotFound: return "FileNotFound";
        case ErrorCode::ZeroVariance: return "ZeroVariance";
        case ErrorCode::AsymmetricBands: return "AsymmetricBands";
        case ErrorCode::InvalidAxes: return "InvalidAxes";
        case ErrorCode::AllScalesInfinite: return "AllScalesInfinite";
        case ErrorCode::InfiniteScalesPresent: return "InfiniteScalesPresent";
        case ErrorCode::InvalidRange: return "InvalidRange";
        case ErrorCode::MismatchedBase: return "MismatchedBase";
        case ErrorCode::ZeroReferenceArea: return "ZeroReferenceArea";
        case ErrorCode::TargetUnreachable: return "TargetUnreachable";
    }
    return "UnknownError";
}

void Dataset::finalize() {
    const std::size_t n = y_.size();
    err_.resize(n);
    double hw_sum = 0.0;
    symmetric_ = true;
    for (std::size_t i = 0; i < n; ++i) {
        err_[i] = y_[i] - y_hat_[i];
        hw_sum += 0.5 * (z_lower_[i] + z_upper_[i]);
        if (z_lower_[i] != z_upper_[i]) symmetric_ = false;
    }
    half_width_mean_ = hw_sum / static_cast<double>(n);
}

std::vector<PredictionRecord> Dataset::records() const {
    std::vector<PredictionRecord> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(record(i));
    return out;
}

Dataset validate(std::vector<PredictionRecord> records, std::string name) {
    if (records.empty()) throw Error(ErrorCode::EmptyDataset, "EmptyDataset: no records");
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        check_record(i, r.y, r.y_hat, r.z_lower, r.z_upper);
    }
    Dataset ds;
    ds.name_ = std::move(name);
    const std::size_t n = records.size();
    ds.y_.reserve(n);
    ds.y_hat_.reserve(n);
    ds.z_lower_.reserve(n);
    ds.z_upper_.reserve(n);
    for (const auto& r : records) {
        ds.y_.push_back(r.y);
        ds.y_hat_.push_back(r.y_hat);
        ds.z_lower_.push_back(r.z_lower);
        ds.z_upper_.push_back(r.z_upper);
    }
    ds.finalize();
    return ds;
}

Dataset from_columns(std::vector<double> y, std::vector<double> y_hat,
                     std::vector<double> z_lower, std::vector<double> z_upper,
                     std::string name) {
    const std::size_t n = y.size();
    if (y_hat.size() != n || z_lower.size() != n || z_upper.size() != n) {
        throw Error(ErrorCode::LengthMismatch, "LengthMismatch: columns have unequal lengths");
    }
    if (n == 0) throw Error(ErrorCode::EmptyDataset, "EmptyDataset: no records");
    for (std::size_t i = 0; i < n; ++i) {
        check_record(i, y[i], y_hat[i], z_lower[i], z_upper[i]);
    }
    Dataset ds;
    ds.name_ = std::move(name);
    ds.y_ = std::move(y);
    ds.y_hat_ = std::move(y_hat);
    ds.z_lower_ = std::move(z_lower);
    ds.z_upper_ = std::move(z_upper);
    ds.finalize();
    return ds;
}

Dataset from_bounds(const std::vector<double>& y, const std::vector<double>& y_hat,
                    const std::vector<double>& lower, const std::vector<double>& upper,
                    std::string name) {
    const std::size_t n = y.size();
    if (y_hat.size() != n || lower.size() != n || upper.size() != n) {
        throw Error(ErrorCode::LengthMismatch, "LengthMismatch: columns have unequal lengths");
    }
    if (n == 0) throw Error(ErrorCode::EmptyDataset, "EmptyDataset: no records");
    std::vector<double> zl(n), zu(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(lower[i]) || !std::isfinite(upper[i])) {
            throw_at(ErrorCode::NonFiniteValue, i, "bound is not finite");
        }
        if (lower[i] > y_hat[i] || y_hat[i] > upper[i]) {
            throw_at(ErrorCode::BoundOrderViolation, i, "requires lower <= y_hat <= upper");
        }
        zl[i] = y_hat[i] - lower[i];
        zu[i] = upper[i] - y_hat[i];
    }
    return from_columns(y, y_hat, std::move(zl), std::move(zu), std::move(name));
}

double population_std(std::span<const double> v) {
    const double n = static_cast<double>(v.size());
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= n;
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / n);
}

Dataset normalize_std(const Dataset& ds) {
    const double sigma = population_std(ds.y());
    if (sigma == 0.0) {
        throw Error(ErrorCode::ZeroVariance, "ZeroVariance: y has zero standard deviation");
    }
    Dataset out;
    out.name_ = ds.name();
    const std::size_t n = ds.size();
    out.y_.resize(n);
    out.y_hat_.resize(n);
    out.z_lower_.resize(n);
    out.z_upper_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.y_[i] = ds.y()[i] / sigma;
        out.y_hat_[i] = ds.y_hat()[i] / sigma;
        out.z_lower_[i] = ds.z_lower()[i] / sigma;
        out.z_upper_[i] = ds.z_upper()[i] / sigma;
    }
    out.normalization_ = Normalization::std_units;
    out.std_divisor_ = sigma;
    out.finalize();
    return out;
}

std::uint64_t base_fingerprint(const Dataset& ds) {
    // FNV-1a over the raw bit patterns of y then y_hat.
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix_bits = [&h](double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof(bits));
        for (int shift = 0; shift < 64; shift += 8) {
            h ^= (bits >> shift) & 0xffu;
            h *= 0x100000001b3ull;
        }
    };
    for (double v : ds.y()) mix_bits(v);
    for (double v : ds.y_hat()) mix_bits(v);
    return h;
}

}  // namespace ucc
