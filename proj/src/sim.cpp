#include "nfobs/sim.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "nfobs/rk4.hpp"

namespace nfobs {

void Scenario::validate() const {
  if (!(dt > 0.0)) throw ParameterError("sim.dt must be > 0");
  if (!(t_end > 0.0)) throw ParameterError("sim.t_end must be > 0");
  if (!input) throw ParameterError("scenario has no input signal");
  if (with_observer) observer.inverse.validate();
}

double TrajectoryRecord::terminal_error() const {
  return rows.empty() ? std::numeric_limits<double>::quiet_NaN() : rows.back().err;
}

double TrajectoryRecord::max_error(double t0, double t1) const {
  double m = 0.0;
  for (const auto& r : rows) {
    if (r.t >= t0 && r.t <= t1) m = std::max(m, r.err);
  }
  return m;
}

double TrajectoryRecord::initial_peak() const {
  const double t1 = switches.empty() ? std::numeric_limits<double>::infinity() : switches.front().t;
  return max_error(-std::numeric_limits<double>::infinity(), t1);
}

ReducedModel reduced(const Scenario& s) { return reduce(s.params, s.input, s.activity_based); }

namespace {

using Joint = Eigen::Matrix<double, 7, 1>;

TrajectoryRow make_row(double t, const Vec3& v, const HybridObserver* obs) {
  TrajectoryRow row;
  row.t = t;
  row.v = v;
  row.y = v.x();
  if (obs != nullptr) {
    const ObserverState& st = obs->state();
    row.mode = st.mode;
    row.v_hat = st.v_hat;
    row.z_hat = st.z_hat;
    row.err = (st.v_hat - v).norm();
  }
  return row;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const AssumptionError*>(&e) != nullptr) return 3;
  if (dynamic_cast<const ConfigError*>(&e) != nullptr || dynamic_cast<const IoError*>(&e) != nullptr) return 2;
  return 4;
}

}  // namespace

TrajectoryRecord run_scenario(const Scenario& s) {
  s.validate();
  const ReducedModel red = reduced(s);
  const Model model(red.params);
  const InputPtr input = red.input;
  const auto steps = static_cast<long>(std::llround(s.t_end / s.dt));

  TrajectoryRecord rec;
  rec.with_observer = s.with_observer;
  rec.rows.reserve(static_cast<std::size_t>(steps) + 1);

  auto plant = [&](double t, const Vec3& v) { return f_cartesian(model, *input, v, t); };

  if (!s.with_observer) {
    Vec3 v = s.v_init;
    rec.rows.push_back(make_row(0.0, v, nullptr));
    try {
      for (long n = 0; n < steps; ++n) {
        const double t = n * s.dt;
        v = rk4_step(plant, v, t, s.dt);
        rec.rows.push_back(make_row((n + 1) * s.dt, v, nullptr));
      }
    } catch (const Error& e) {
      rec.failure = e.what();
      rec.failure_code = exit_code_for(e);
    }
    return rec;
  }

  HybridObserver obs(model, input, s.observer);
  Vec3 v = s.v_init;
  try {
    const double y_next = rk4_step(plant, v, 0.0, s.dt).x();
    obs.reset(s.vhat_init, v.x(), y_next, 0.0);
    rec.rows.push_back(make_row(0.0, v, &obs));

    for (long n = 0; n < steps; ++n) {
      const double t = n * s.dt;
      const bool z_mode = obs.state().mode == Mode::ZMode;
      Joint x;
      x.head<3>() = v;
      if (z_mode) {
        x.tail<4>() = obs.state().z_hat;
      } else {
        x.tail<4>() << obs.state().v_hat, 0.0;
      }
      auto rhs = [&](double tt, const Joint& xx) {
        Joint dx;
        const Vec3 vv = xx.head<3>();
        dx.head<3>() = plant(tt, vv);
        if (z_mode) {
          dx.tail<4>() = obs.z_mode_rhs(xx.tail<4>(), vv.x(), tt);
        } else {
          dx.tail<4>() << obs.v_mode_rhs(xx.segment<3>(3), tt), 0.0;
        }
        return dx;
      };
      x = rk4_step(rhs, x, t, s.dt);
      v = x.head<3>();
      const double t1 = (n + 1) * s.dt;
      obs.commit(x.tail<4>(), x.segment<3>(3), v.x(), t1);
      rec.rows.push_back(make_row(t1, v, &obs));
    }
  } catch (const Error& e) {
    rec.failure = e.what();
    rec.failure_code = exit_code_for(e);
  }
  rec.switches = obs.state().switches;
  return rec;
}

namespace {

void put(std::string& line, double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  line.append(buf, res.ptr);
}

}  // namespace

void write_csv(const TrajectoryRecord& rec, const std::string& path, int stride) {
  if (stride < 1) throw ParameterError("stride must be >= 1");
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << kCsvHeader << '\n';
  std::string line;
  const std::size_t n = rec.rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i % static_cast<std::size_t>(stride) != 0 && i + 1 != n) continue;
    const auto& r = rec.rows[i];
    line.clear();
    put(line, r.t);
    for (int k = 0; k < 3; ++k) {
      line += ',';
      put(line, r.v[k]);
    }
    line += ',';
    put(line, r.y);
    for (int k = 0; k < 3; ++k) {
      line += ',';
      if (r.mode) put(line, r.v_hat[k]);
    }
    for (int k = 0; k < 4; ++k) {
      line += ',';
      if (r.mode == Mode::ZMode) put(line, r.z_hat[k]);
    }
    line += ',';
    if (r.mode) line += mode_name(*r.mode);
    line += ',';
    if (r.mode) put(line, r.err);
    out << line << '\n';
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

std::vector<std::vector<double>> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      if (cell.empty()) {
        row.push_back(std::numeric_limits<double>::quiet_NaN());
      } else if (cell == "Z") {
        row.push_back(1.0);
      } else if (cell == "V") {
        row.push_back(0.0);
      } else {
        double x = 0.0;
        const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), x);
        if (res.ec != std::errc{}) throw IoError("bad number '" + cell + "' in '" + path + "'");
        row.push_back(x);
      }
    }
    if (!line.empty() && line.back() == ',') row.push_back(std::numeric_limits<double>::quiet_NaN());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace nfobs
