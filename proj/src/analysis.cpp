#include "mgf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mgf {

PowerSpectrum power_spectrum(const std::vector<std::vector<double>>& signals,
                             double dt, bool hann_window) {
    if (signals.empty() || signals.front().empty()) {
        throw std::invalid_argument("power_spectrum: empty signal");
    }
    if (dt <= 0.0) throw std::invalid_argument("power_spectrum: dt <= 0");
    const std::size_t t_len = signals.front().size();
    for (const auto& s : signals) {
        if (s.size() != t_len) {
            throw std::invalid_argument("power_spectrum: ragged channels");
        }
    }

    std::vector<double> window(t_len, 1.0);
    if (hann_window) {
        for (std::size_t t = 0; t < t_len; ++t) {
            window[t] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * t /
                                             static_cast<double>(t_len));
        }
    }

    const std::size_t n_bins = t_len / 2 + 1;
    PowerSpectrum spec;
    spec.dt = dt;
    spec.hann = hann_window;
    spec.frequencies.resize(n_bins);
    for (std::size_t k = 0; k < n_bins; ++k) {
        spec.frequencies[k] =
            static_cast<double>(k) / (static_cast<double>(t_len) * dt);
    }

    spec.power.reserve(signals.size());
    for (const auto& s : signals) {
        std::vector<double> p(n_bins);
        for (std::size_t k = 0; k < n_bins; ++k) {
            double re = 0.0, im = 0.0;
            const double w = 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(t_len);
            for (std::size_t t = 0; t < t_len; ++t) {
                const double x = s[t] * window[t];
                re += x * std::cos(w * static_cast<double>(t));
                im -= x * std::sin(w * static_cast<double>(t));
            }
            const double mag2 = re * re + im * im;
            // fold the conjugate half; k=0 and an even-length Nyquist bin
            // have no partner
            const bool single = k == 0 || (t_len % 2 == 0 && k == t_len / 2);
            p[k] = (single ? mag2 : 2.0 * mag2) / static_cast<double>(t_len);
        }
        spec.power.push_back(std::move(p));
    }
    return spec;
}

PowerSpectrum power_spectrum(const DynamicsTrace& trace, bool hann_window) {
    if (trace.times.size() < 2) {
        throw std::invalid_argument("power_spectrum: trace too short");
    }
    return power_spectrum(trace.magnetization,
                          trace.times[1] - trace.times[0], hann_window);
}

std::vector<Peak> detect_peaks(const PowerSpectrum& spectrum, int channel,
                               double min_prominence) {
    const auto& p = spectrum.power.at(static_cast<std::size_t>(channel));
    const int n = static_cast<int>(p.size());
    std::vector<Peak> peaks;
    for (int k = 1; k + 1 < n; ++k) {
        if (!(p[k] > p[k - 1] && p[k] >= p[k + 1])) continue;
        // walk to the flanking minima
        double left = p[k];
        for (int j = k - 1; j >= 1 && p[j] <= p[j + 1]; --j) {
            left = std::min(left, p[j]);
        }
        double right = p[k];
        for (int j = k + 1; j < n && p[j] <= p[j - 1]; ++j) {
            right = std::min(right, p[j]);
        }
        Peak peak;
        peak.bin = k;
        peak.frequency = spectrum.frequencies[k];
        peak.power = p[k];
        peak.prominence = p[k] - std::max(left, right);
        if (peak.prominence >= min_prominence) peaks.push_back(peak);
    }
    std::sort(peaks.begin(), peaks.end(),
              [](const Peak& a, const Peak& b) { return a.power > b.power; });
    return peaks;
}

EquilibrationResult equilibration_time(const std::vector<double>& times,
                                       const std::vector<double>& signal) {
    if (times.size() != signal.size() || signal.size() < 2) {
        throw std::invalid_argument("equilibration_time: bad input");
    }
    EquilibrationResult r;
    double sum = 0.0, sum2 = 0.0;
    for (double x : signal) {
        sum += x;
        sum2 += x * x;
    }
    const double n = static_cast<double>(signal.size());
    r.mean = sum / n;
    r.fluctuation = std::sqrt(std::max(0.0, sum2 / n - r.mean * r.mean));

    for (std::size_t i = 0; i < signal.size(); ++i) {
        const double d = std::abs(signal[i] - r.mean) - r.fluctuation;
        if (d <= 0.0) {
            if (i == 0) {
                r.time = times[0];
            } else {
                const double d_prev =
                    std::abs(signal[i - 1] - r.mean) - r.fluctuation;
                const double frac = d_prev / (d_prev - d);
                r.time = times[i - 1] + frac * (times[i] - times[i - 1]);
            }
            r.found = true;
            break;
        }
    }
    return r;
}

DampingFit fit_damping(const std::vector<double>& times,
                       const std::vector<double>& signal) {
    if (times.size() != signal.size() || signal.size() < 5) {
        throw std::invalid_argument("fit_damping: bad input");
    }
    double mean = 0.0;
    for (double x : signal) mean += x;
    mean /= static_cast<double>(signal.size());

    std::vector<double> t_env, y_env;
    for (std::size_t i = 1; i + 1 < signal.size(); ++i) {
        const double y = std::abs(signal[i] - mean);
        const double yl = std::abs(signal[i - 1] - mean);
        const double yr = std::abs(signal[i + 1] - mean);
        if (y > yl && y >= yr && y > 1e-12) {
            t_env.push_back(times[i]);
            y_env.push_back(std::log(y));
        }
    }

    DampingFit fit;
    fit.n_extrema = static_cast<int>(t_env.size());
    if (t_env.size() < 2) return fit;

    // least squares for log y = log A - gamma t
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    for (std::size_t i = 0; i < t_env.size(); ++i) {
        st += t_env[i];
        sy += y_env[i];
        stt += t_env[i] * t_env[i];
        sty += t_env[i] * y_env[i];
    }
    const double m = static_cast<double>(t_env.size());
    const double det = m * stt - st * st;
    if (std::abs(det) < 1e-14) return fit;
    const double slope = (m * sty - st * sy) / det;
    const double intercept = (sy * stt - st * sty) / det;

    fit.rate = std::max(0.0, -slope);
    fit.amplitude = std::exp(intercept);
    double ss = 0.0;
    for (std::size_t i = 0; i < t_env.size(); ++i) {
        const double r = y_env[i] - (intercept + slope * t_env[i]);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / m);
    fit.ok = true;
    return fit;
}

std::string spectrum_to_csv(const PowerSpectrum& spectrum) {
    std::ostringstream out;
    out << "frequency,qubit,power\n";
    char buf[96];
    for (std::size_t q = 0; q < spectrum.power.size(); ++q) {
        for (std::size_t k = 0; k < spectrum.frequencies.size(); ++k) {
            std::snprintf(buf, sizeof(buf), "%.12g,%zu,%.12g\n",
                          spectrum.frequencies[k], q + 1,
                          spectrum.power[q][k]);
            out << buf;
        }
    }
    return out.str();
}

std::string peaks_to_json(const std::vector<std::vector<Peak>>& per_channel) {
    nlohmann::json root = nlohmann::json::array();
    for (std::size_t q = 0; q < per_channel.size(); ++q) {
        nlohmann::json entry;
        entry["qubit"] = q + 1;
        entry["peaks"] = nlohmann::json::array();
        for (const auto& p : per_channel[q]) {
            entry["peaks"].push_back({{"frequency", p.frequency},
                                      {"power", p.power},
                                      {"prominence", p.prominence},
                                      {"bin", p.bin}});
        }
        root.push_back(entry);
    }
    return root.dump(2) + "\n";
}

std::string equilibration_to_json(
    const std::vector<EquilibrationResult>& per_channel) {
    nlohmann::json root = nlohmann::json::array();
    for (std::size_t q = 0; q < per_channel.size(); ++q) {
        root.push_back({{"qubit", q + 1},
                        {"mean", per_channel[q].mean},
                        {"fluctuation", per_channel[q].fluctuation},
                        {"time", per_channel[q].time},
                        {"found", per_channel[q].found}});
    }
    return root.dump(2) + "\n";
}

std::string damping_to_json(const std::vector<DampingFit>& per_channel) {
    nlohmann::json root = nlohmann::json::array();
    for (std::size_t q = 0; q < per_channel.size(); ++q) {
        root.push_back({{"qubit", q + 1},
                        {"rate", per_channel[q].rate},
                        {"amplitude", per_channel[q].amplitude},
                        {"residual", per_channel[q].residual},
                        {"n_extrema", per_channel[q].n_extrema},
                        {"ok", per_channel[q].ok}});
    }
    return root.dump(2) + "\n";
}

}  // namespace mgf
