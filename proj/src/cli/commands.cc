// Copyright 2026 The noclick Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <map>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <tuple>

#include "csv.h"
#include "noclick/cli.h"
#include "noclick/entropy.h"
#include "noclick/errors.h"
#include "noclick/parallel.h"

namespace noclick::cli {

namespace {

// Owns a file stream when the path is not "-"; throws std::runtime_error when unwritable.
class Sink {
  public:
    Sink(const std::string &path, std::ostream &fallback) : os_(&fallback) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
            os_ = file_.get();
        }
    }
    std::ostream &get() { return *os_; }

  private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream *os_;
};

std::vector<std::string> key_cells(const ModelParams &p) {
    return {to_string(p.kind), fmt(p.L), fmt(p.h), fmt(p.gamma), fmt(p.d)};
}

std::vector<std::string> with_key(const ModelParams &p, std::vector<std::string> rest) {
    std::vector<std::string> cells = key_cells(p);
    cells.insert(cells.end(), rest.begin(), rest.end());
    return cells;
}

const std::vector<std::string> kKeyColumns = {"model", "L", "h", "gamma", "d"};

std::vector<std::string> columns(std::vector<std::string> rest) {
    std::vector<std::string> c = kKeyColumns;
    c.insert(c.end(), rest.begin(), rest.end());
    return c;
}

std::vector<int> sizes_for(const RunConfig &cfg, int L) {
    if (cfg.LAs.empty()) return fit_window(L);
    for (int l : cfg.LAs) {
        if (l < 1 || l > L) {
            throw InvalidParameter("subsystem size " + std::to_string(l) + " outside [1, " + std::to_string(L) +
                                   "]");
        }
    }
    return cfg.LAs;
}

std::string state_name(StateKind k) {
    switch (k) {
        case StateKind::kVacuum:
            return "vacuum";
        case StateKind::kSteady:
            return "steady";
        case StateKind::kAveraged:
            return "averaged";
    }
    return "averaged";
}

}  // namespace

std::vector<ModelParams> expand_axes(const RunConfig &cfg) {
    if (cfg.gammas.empty() || cfg.hs.empty() || cfg.ds.empty() || cfg.Ls.empty()) {
        throw InvalidParameter("scan axes must be non-empty");
    }
    std::vector<ModelParams> out;
    for (int L : cfg.Ls) {
        for (double d : cfg.ds) {
            for (double h : cfg.hs) {
                for (double g : cfg.gammas) {
                    ModelParams p = cfg.base;
                    p.L = L;
                    p.d = d;
                    p.h = h;
                    p.gamma = g;
                    p.validate();
                    out.push_back(p);
                }
            }
        }
    }
    return out;
}

int cmd_spectrum(const RunConfig &cfg, std::ostream &out) {
    std::vector<ModelParams> tuples = expand_axes(cfg);
    Sink sink(cfg.out, out);
    using Rows = std::vector<std::vector<std::string>>;
    std::vector<Rows> blocks = parallel_map<Rows>(static_cast<int>(tuples.size()), cfg.threads, [&](int i) {
        const ModelParams &p = tuples[i];
        SpectrumSummary s = spectrum_summary(p);
        std::string qstar = s.qstar ? fmt(*s.qstar) : "";
        std::string gc = std::abs(p.h) < p.J ? fmt(s.gamma_c) : "";
        Rows rows;
        for (double k : momentum_grid(p)) {
            cplx lam = mode_data(p, k).lambda;
            rows.push_back(with_key(p, {fmt(k), fmt(lam.real()), fmt(lam.imag()), fmt(s.imaginary_gap), qstar, gc}));
        }
        return rows;
    });
    CsvWriter csv(sink.get(), "spectrum",
                  columns({"k", "re_lambda", "im_lambda", "imaginary_gap", "qstar", "gamma_c"}));
    for (const auto &b : blocks) {
        for (const auto &r : b) csv.row(r);
    }
    return 0;
}

int cmd_entropy_scan(const RunConfig &cfg, std::ostream &out, std::ostream &) {
    std::vector<ModelParams> tuples = expand_axes(cfg);
    Sink sink(cfg.out, out);
    struct Block {
        EntropyScan rows;
        std::optional<LogFit> fit;
        SpectrumSummary summary;
    };
    std::vector<Block> blocks = parallel_map<Block>(static_cast<int>(tuples.size()), cfg.threads, [&](int i) {
        const ModelParams &p = tuples[i];
        std::vector<int> LAs = sizes_for(cfg, p.L);
        Block b;
        switch (cfg.state) {
            case StateKind::kVacuum:
                b.rows = entropy_profile(p, vacuum_state(p), LAs);
                break;
            case StateKind::kSteady:
                b.rows = entropy_profile(p, steady_state(p, cfg.phi), LAs);
                break;
            case StateKind::kAveraged:
                b.rows = phase_averaged_profile(p, LAs, cfg.n_phases);
                break;
        }
        if (std::set<int>(LAs.begin(), LAs.end()).size() >= 3) b.fit = fit_log_law(b.rows);
        b.summary = spectrum_summary(p);
        return b;
    });
    CsvWriter csv(sink.get(), "entropy-scan",
                  columns({"LA", "S", "deltaS", "c", "phi_averaged", "state"}));
    for (size_t i = 0; i < blocks.size(); ++i) {
        for (const auto &r : blocks[i].rows) {
            csv.row(with_key(tuples[i], {fmt(r.LA), fmt(r.S), fmt(r.deltaS), fmt(r.c), fmt(r.phi_averaged),
                                         state_name(cfg.state)}));
        }
    }
    if (!cfg.fit_out.empty()) {
        Sink fits(cfg.fit_out, out);
        CsvWriter fcsv(fits.get(), "entropy-fit",
                       columns({"c_fit", "b0", "residual", "imaginary_gap", "gamma_c", "state"}));
        for (size_t i = 0; i < blocks.size(); ++i) {
            const Block &b = blocks[i];
            double nan = std::numeric_limits<double>::quiet_NaN();
            fcsv.row(with_key(tuples[i], {fmt(b.fit ? b.fit->c : nan), fmt(b.fit ? b.fit->b0 : nan),
                                          fmt(b.fit ? b.fit->residual : nan), fmt(b.summary.imaginary_gap),
                                          fmt(b.summary.gamma_c), state_name(cfg.state)}));
        }
    }
    return 0;
}

int cmd_trajectories(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    std::vector<ModelParams> tuples = expand_axes(cfg);
    Sink sink(cfg.out, out);
    struct Block {
        EnsembleSummary summary;
        std::vector<TrajectoryRecord> records;
    };
    bool keep_records = !cfg.records_out.empty() || !cfg.fit_out.empty();
    std::vector<Block> blocks = parallel_map<Block>(static_cast<int>(tuples.size()), cfg.threads, [&](int i) {
        const ModelParams &p = tuples[i];
        TrajectoryConfig tc = cfg.trajectory;
        tc.seed = cfg.seed;
        tc.entropy_LAs = sizes_for(cfg, p.L);
        Block b;
        b.summary = run_ensemble(p, tc, cfg.n_trajectories, keep_records ? &b.records : nullptr);
        return b;
    });
    for (size_t i = 0; i < tuples.size(); ++i) {
        SpectrumSummary s = spectrum_summary(tuples[i]);
        if (!s.has_resonance) {
            err << "warning: no resonant momentum at gamma=" << fmt(tuples[i].gamma) << " h=" << fmt(tuples[i].h)
                << " (gamma >= gamma_c); trajectories stay at x = infinity\n";
        }
    }
    CsvWriter csv(sink.get(), "trajectories", columns({"LA", "mean_S", "c_fit", "n_trajectories", "regime"}));
    for (size_t i = 0; i < blocks.size(); ++i) {
        const EnsembleSummary &s = blocks[i].summary;
        std::string regime = spectrum_summary(tuples[i]).has_resonance ? "resonant" : "pinned";
        for (size_t j = 0; j < s.LAs.size(); ++j) {
            csv.row(with_key(tuples[i], {fmt(s.LAs[j]), fmt(s.mean_S[j]), fmt(s.c), fmt(s.n_trajectories), regime}));
        }
    }
    if (!cfg.records_out.empty()) {
        Sink rs(cfg.records_out, out);
        CsvWriter rcsv(rs.get(), "trajectory-records",
                       columns({"trajectory", "jump", "x_before_re", "x_before_im", "x_after_re", "x_after_im", "tau",
                                "elapsed", "phi", "entropies"}));
        for (size_t i = 0; i < blocks.size(); ++i) {
            for (size_t t = 0; t < blocks[i].records.size(); ++t) {
                for (const JumpEvent &ev : blocks[i].records[t].events) {
                    cplx xb = ev.before.ratio();
                    cplx xa = ev.after.ratio();
                    std::string ent;
                    for (size_t j = 0; j < ev.entropies.size(); ++j) {
                        if (j) ent += ';';
                        ent += fmt(ev.entropies[j]);
                    }
                    rcsv.row(with_key(tuples[i], {fmt(static_cast<int>(t)), fmt(ev.index), fmt(xb.real()),
                                                  fmt(xb.imag()), fmt(xa.real()), fmt(xa.imag()), fmt(ev.tau),
                                                  fmt(ev.elapsed), fmt(ev.phi), ent}));
                }
            }
        }
    }
    if (!cfg.fit_out.empty()) {
        Sink fs(cfg.fit_out, out);
        CsvWriter fcsv(fs.get(), "trajectory-fits", columns({"trajectory", "c_fit", "b0", "residual"}));
        for (size_t i = 0; i < blocks.size(); ++i) {
            for (size_t t = 0; t < blocks[i].records.size(); ++t) {
                const TrajectoryRecord &rec = blocks[i].records[t];
                std::vector<double> mean(rec.entropy_LAs.size(), 0.0);
                int n = 0;
                auto add = [&](const std::vector<double> &S) {
                    for (size_t j = 0; j < S.size(); ++j) mean[j] += S[j];
                    ++n;
                };
                if (rec.events.empty()) add(rec.initial_entropies);
                for (const auto &ev : rec.events) add(ev.entropies);
                for (double &m : mean) m /= n;
                double nan = std::numeric_limits<double>::quiet_NaN();
                LogFit fit{nan, nan, nan};
                if (std::set<int>(rec.entropy_LAs.begin(), rec.entropy_LAs.end()).size() >= 3) {
                    fit = fit_log_law(rec.entropy_LAs, mean);
                }
                fcsv.row(with_key(tuples[i], {fmt(static_cast<int>(t)), fmt(fit.c), fmt(fit.b0), fmt(fit.residual)}));
            }
        }
    }
    return 0;
}

int cmd_validity(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    std::vector<ModelParams> tuples = expand_axes(cfg);
    Sink sink(cfg.out, out);
    struct Row {
        ValidityEstimate v;
        std::string note;
    };
    std::vector<Row> rows = parallel_map<Row>(static_cast<int>(tuples.size()), cfg.threads, [&](int i) {
        Row r;
        try {
            r.v = validity_estimate(tuples[i], tuples[i].L);
            r.note = r.v.caveat;
        } catch (const RegimeError &e) {
            double nan = std::numeric_limits<double>::quiet_NaN();
            r.v.L = tuples[i].L;
            r.v.lambda_dt = r.v.lambda_dt_direct = r.v.tau = nan;
            r.note = std::string("out of regime: ") + e.what();
        }
        return r;
    });
    CsvWriter csv(sink.get(), "validity",
                  columns({"lambda_dt", "lambda_dt_direct", "tau", "valid", "caveat"}));
    std::map<std::tuple<double, double, double>, std::optional<int>> largest_valid;
    for (size_t i = 0; i < rows.size(); ++i) {
        const Row &r = rows[i];
        csv.row(with_key(tuples[i], {fmt(r.v.lambda_dt), fmt(r.v.lambda_dt_direct), fmt(r.v.tau), fmt(r.v.valid),
                                     "\"" + r.note + "\""}));
        auto key = std::make_tuple(tuples[i].h, tuples[i].gamma, tuples[i].d);
        auto &slot = largest_valid[key];
        if (r.v.valid && (!slot || *slot < r.v.L)) slot = r.v.L;
    }
    if (cfg.Ls.size() > 1) {
        for (const auto &[key, L] : largest_valid) {
            err << "h=" << fmt(std::get<0>(key)) << " gamma=" << fmt(std::get<1>(key)) << ": largest valid L = "
                << (L ? std::to_string(*L) : std::string("none")) << "\n";
        }
    }
    return 0;
}

}  // namespace noclick::cli
