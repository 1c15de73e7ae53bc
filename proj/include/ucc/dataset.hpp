#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ucc {

/// One regression prediction with its uncertainty band, in target units.
/// The band at calibration scale k covers [y_hat - k*z_lower, y_hat + k*z_upper].
struct PredictionRecord {
    double y;        // observed target
    double y_hat;    // point prediction
    double z_lower;  // half-band below y_hat, >= 0
    double z_upper;  // half-band above y_hat, >= 0

    bool operator==(const PredictionRecord&) const = default;
};

enum class Normalization { none, std_units };

/// Immutable, validated set of prediction records, stored column-wise.
/// Build one through validate(), from_bounds() or from_columns().
class Dataset {
public:
    std::size_t size() const noexcept { return y_.size(); }
    const std::string& name() const noexcept { return name_; }
    Normalization normalization() const noexcept { return normalization_; }

    /// Divisor applied by normalize_std(); 1.0 for unnormalized data.
    double std_divisor() const noexcept { return std_divisor_; }

    std::span<const double> y() const noexcept { return y_; }
    std::span<const double> y_hat() const noexcept { return y_hat_; }
    std::span<const double> z_lower() const noexcept { return z_lower_; }
    std::span<const double> z_upper() const noexcept { return z_upper_; }

    /// Cached signed errors y - y_hat.
    std::span<const double> error() const noexcept { return err_; }

    /// Mean of (z_lower + z_upper) / 2; bandwidth at scale k is k times this.
    double half_width_mean() const noexcept { return half_width_mean_; }

    PredictionRecord record(std::size_t i) const {
        return {y_[i], y_hat_[i], z_lower_[i], z_upper_[i]};
    }

    std::vector<PredictionRecord> records() const;

    bool symmetric_bands() const noexcept { return symmetric_; }

private:
    Dataset() = default;

    friend Dataset validate(std::vector<PredictionRecord>, std::string);
    friend Dataset from_columns(std::vector<double>, std::vector<double>,
                                std::vector<double>, std::vector<double>, std::string);
    friend Dataset normalize_std(const Dataset&);

    void finalize();  // derived caches; called once all columns are in place

    std::vector<double> y_, y_hat_, z_lower_, z_upper_, err_;
    double half_width_mean_ = 0.0;
    bool symmetric_ = true;
    std::string name_;
    Normalization normalization_ = Normalization::none;
    double std_divisor_ = 1.0;
};

/// Checks records (nonempty, finite fields, nonnegative bands) and returns the
/// dataset.  Throws Error with the offending record index on failure.
Dataset validate(std::vector<PredictionRecord> records, std::string name = "");

/// Column-oriented equivalent of validate(); also checks equal lengths.
Dataset from_columns(std::vector<double> y, std::vector<double> y_hat,
                     std::vector<double> z_lower, std::vector<double> z_upper,
                     std::string name = "");

/// Converts absolute interval bounds [lower, upper] around y_hat into bands.
/// Requires lower_i <= y_hat_i <= upper_i.
Dataset from_bounds(const std::vector<double>& y, const std::vector<double>& y_hat,
                    const std::vector<double>& lower, const std::vector<double>& upper,
                    std::string name = "");

/// Rescales every column by the population standard deviation of y, so the
/// curve x axis reads in standard units.  Throws ZeroVariance when y is constant.
Dataset normalize_std(const Dataset& ds);

/// Population standard deviation (divide by N).
double population_std(std::span<const double> v);

/// Order-sensitive hash of the (y, y_hat) columns at bit level.  Curves built
/// from the same base predictions compare equal; used to reject comparisons
/// across unrelated datasets.
std::uint64_t base_fingerprint(const Dataset& ds);

}  // namespace ucc
