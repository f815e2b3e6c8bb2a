#pragma once

#include <string>
#include <vector>

#include "mgf/exact.hpp"

namespace mgf {

// One-sided power spectrum of a real, uniformly sampled signal.
struct PowerSpectrum {
    std::vector<double> frequencies;          // cycles per unit time
    std::vector<std::vector<double>> power;   // [channel][bin]
    double dt = 0.0;
    bool hann = false;
};

// Naive DFT; fine for the few-hundred-sample traces this tool produces.
// Folds the redundant half so that sum(power) equals sum(x^2) (Parseval).
PowerSpectrum power_spectrum(const std::vector<std::vector<double>>& signals,
                             double dt, bool hann_window = false);
PowerSpectrum power_spectrum(const DynamicsTrace& trace,
                             bool hann_window = false);

struct Peak {
    double frequency = 0.0;
    double power = 0.0;
    double prominence = 0.0;
    int bin = 0;
};

// Local maxima of one channel, DC bin excluded, sorted by descending power.
// Prominence is measured against the higher of the two flanking minima.
std::vector<Peak> detect_peaks(const PowerSpectrum& spectrum, int channel,
                               double min_prominence = 0.0);

struct EquilibrationResult {
    double mean = 0.0;         // time average over the window
    double fluctuation = 0.0;  // rms deviation from the mean
    double time = 0.0;         // first entry of the band mean +/- fluctuation
    bool found = false;
};

// Time average statistics and the first (linearly interpolated) crossing into
// the band [mean - fluctuation, mean + fluctuation].
EquilibrationResult equilibration_time(const std::vector<double>& times,
                                       const std::vector<double>& signal);

struct DampingFit {
    double rate = 0.0;       // gamma in A exp(-gamma t)
    double amplitude = 0.0;  // A
    double residual = 0.0;   // rms of the log-linear fit
    int n_extrema = 0;
    bool ok = false;
};

// Fits an exponential envelope to |signal - mean| at its local extrema.
DampingFit fit_damping(const std::vector<double>& times,
                       const std::vector<double>& signal);

std::string spectrum_to_csv(const PowerSpectrum& spectrum);
std::string peaks_to_json(const std::vector<std::vector<Peak>>& per_channel);
std::string equilibration_to_json(
    const std::vector<EquilibrationResult>& per_channel);
std::string damping_to_json(const std::vector<DampingFit>& per_channel);

}  // namespace mgf
