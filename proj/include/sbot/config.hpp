#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sbot/geometry.hpp"

namespace sbot {

struct CourtConfig {
  double length = 13.4;
  double width = 6.1;
  double net_height = 1.55;
  // Success region on the opponent half; empty (min==max) means "entire
  // opponent half".
  Rectangle success_region;
  // Plain-translation reading of the observation transform: force alpha = 0.
  bool plain_translation = false;

  CourtGeometry geometry() const;
};

struct FlightConfig {
  double mass = 0.00519;           // kg
  double drag_coeff = 1.0819e-3;   // kg/m, from v_t = 6.86 m/s
  double gravity = 9.81;           // m/s^2
  double dt = 0.005;               // physics step, s (200 Hz)
};

struct RacketConfig {
  double radius = 0.12;        // face disc radius, m
  double restitution = 0.7;
  double speed_limit = 15.0;   // max planned racket speed at impact, m/s
};

struct ArmConfig {
  double base_height = 0.30;       // chassis deck to shoulder column base, m
  double shoulder_offset = 0.10;   // column segment above yaw joint, m
  double upper_link = 0.45;        // m
  double forearm_link = 0.45;      // m
  double wrist_offset1 = 0.05;     // m
  double wrist_offset2 = 0.05;     // m
  double racket_shaft = 0.58;      // wrist to face center, m
  std::array<double, 5> joint_lo{-2.8, -0.3, -2.6, -2.2, -2.9};
  std::array<double, 5> joint_hi{2.8, 2.6, 2.6, 2.2, 2.9};
  std::array<double, 5> vel_limit{12.0, 14.0, 16.0, 24.0, 24.0};  // rad/s
  std::array<double, 5> ik_seed{0.0, 0.9, 1.2, -0.6, 0.0};
  double ik_damping = 1e-2;
  int ik_max_iters = 200;
};

struct ChassisConfig {
  double v_max = 5.0;        // m/s
  double a_max = 10.0;       // m/s^2
  double kp = 6.0;           // 1/s
  double yaw_rate_max = 4.0; // rad/s
  double yaw_speed_gate = 0.3;  // |v| below which heading holds, m/s
  double noise_sigma_rel = 0.05;
  Vec2 start{3.0, 0.0};
  double start_alpha = 0.0;
};

struct PerceptionConfig {
  double camera_rate_hz = 120.0;
  double obs_sigma_m = 0.01;
  int min_obs = 5;
  double min_span_s = 0.04;
  int window_max_obs = 40;
  double k_lo_factor = 0.2;
  double k_hi_factor = 5.0;
  int lm_max_iters = 25;
  double converged_rms = 0.25;  // fits with RMS above this are low-confidence
};

struct StrategyConfig {
  double H_b = 1.6;       // chassis-target hitting height, m
  double T_b = 0.3;       // target freeze threshold on t_avail, s
  double T_init = 0.4;    // trust-factor ramp length, s
  double H_min = 1.0;     // hit-height band, m
  double H_max = 2.2;
  double reach_radius = 1.35;    // max horizontal racket reach from base, m
  double reach_min = 0.1;
  double stand_offset = 0.4;     // chassis stands this far behind the hit point, m
  double min_lead = 0.08;        // earliest allowed hit lead time, s
  double plan_freeze = 0.1;      // stop replanning the strike this close to t_h, s
  double follow_through = 0.25;  // s
  double net_clearance = 0.45;   // aim-line clearance above the net tape, m
  double aim_height_min = 0.3;   // aim-point height floor at the target, m
  double out_speed_min = 4.0;    // m/s
  double out_speed_max = 16.0;   // m/s
  // Target landing point; (0,0) means "success region center".
  Vec2 target_landing{0.0, 0.0};
};

struct RewardThresholds {
  std::array<double, 5> accel_limit{200.0, 200.0, 200.0, 300.0, 300.0};  // rad/s^2
  std::array<double, 5> jerk_limit{2.0e4, 2.0e4, 2.0e4, 3.0e4, 3.0e4};   // rad/s^3
  double back_angle = -0.15;        // shoulder pitch below this is "too backward"
  double min_racket_height = 0.2;   // m
};

struct RewardConfig {
  double w_hit = 1.0;
  double w_success = 3.0;
  double w_net_cross = 0.5;
  double w_net_height = 0.3;
  double w_ball_pos = 1.0;
  double w_landing = 1.0;
  double w_dyn_penalty = -1.0;
  double w_unsafe_penalty = -1.0;
  double ball_pos_scale = 0.2;    // m, exp(-d/scale) shaping
  double net_height_scale = 1.0;  // m, clamp(h/scale, 0, 1)
  RewardThresholds thresholds;
};

struct NeuralConfig {
  std::vector<int> hidden{64, 128, 128, 64};
  int history = 8;   // N past observation frames
  int arm_dof = 5;   // S
  double log_std_init = -1.2039728043259361;  // ln 0.3
  double log_std_min = -4.605170185988091;    // ln 0.01
  double log_std_max = 0.0;                   // ln 1.0
  double lr = 3e-4;
  double grad_clip = 1.0;
  double hidden_init_scale = 1.0;
  double out_init_scale = 0.01;
  // Fixed per-frame affine observation normalization (recorded in checkpoints).
  std::vector<double> obs_offset;  // size 0 (identity) or S+3
  std::vector<double> obs_scale;   // size 0 (identity) or S+3
};

struct TrainingConfig {
  int il_iters = 200;   // M
  int rl_iters = 1000;  // Q
  double gamma = 0.99;
  double lambda_sup = 0.5;
  bool lambda_decay = false;
  double clip_eps = 0.2;
  int epochs = 4;
  int minibatch = 512;
  int n_envs = 16;
  int steps_per_env = 256;
  bool normalize_advantages = true;
  bool returns_exclude_current = false;
  double beta_mix = 0.0;  // optional teacher-action mixing during IL collection
  double episode_timeout_s = 3.0;
  double control_rate_hz = 50.0;
  int threads = 0;  // 0 = auto
  // Episode source: "scenarios" draws random serves, "dataset" replays records.
  std::string source = "scenarios";
  std::string dataset_path;
};

struct ScenarioSamplerConfig {
  // Ranges for the randomized serve generator (machine on the opponent half).
  Vec2 pos_x{9.5, 12.0};
  Vec2 pos_y{-2.0, 2.0};
  double pos_z = 0.8;
  Vec2 elevation_deg{18.0, 32.0};
  Vec2 speed{15.0, 21.0};
  Vec2 aim_y{-1.8, 1.8};  // azimuth chosen to sweep this lateral landing range
};

struct EvalConfig {
  int repeats = 10;
  double opponent_error_rate = 0.05;
  double opponent_aim_sigma = 0.5;
  int max_rounds = 40;
};

struct DataConfig {
  double translate_dx_max = 1.0;
  double translate_dy_max = 2.0;
};

struct RunConfig {
  CourtConfig court;
  FlightConfig flight;
  RacketConfig racket;
  ArmConfig arm;
  ChassisConfig chassis;
  PerceptionConfig perception;
  StrategyConfig strategy;
  RewardConfig reward;
  NeuralConfig neural;
  TrainingConfig training;
  ScenarioSamplerConfig sampler;
  EvalConfig eval;
  DataConfig data;
  std::uint64_t seed = 0;

  /// Parses a JSON config file; unknown keys are rejected, missing keys keep
  /// defaults. Throws std::runtime_error with a message naming the offender.
  static RunConfig load(const std::string& path);
  static RunConfig from_json_text(const std::string& text);

  std::string to_json_text() const;
  void save(const std::string& path) const;

  /// FNV-1a hash of the canonical serialized form.
  std::uint64_t hash() const;
};

std::string config_hash_hex(const RunConfig& cfg);

}  // namespace sbot
