#include "sbot/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sbot {

using nlohmann::json;

CourtGeometry CourtConfig::geometry() const {
  CourtGeometry g = CourtGeometry::standard(length, width, net_height);
  if ((success_region.max - success_region.min).norm() > 0.0) {
    g.success_region = success_region;
  }
  return g;
}

namespace {

void expect_keys(const json& j, std::initializer_list<const char*> keys,
                 const std::string& section) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw std::runtime_error("config: unknown key '" + it.key() +
                               "' in section '" + section + "'");
    }
  }
}

template <typename T>
void get_to(const json& j, const char* key, T& v) {
  if (j.contains(key)) j.at(key).get_to(v);
}

void get_vec2(const json& j, const char* key, Vec2& v) {
  if (j.contains(key)) {
    auto a = j.at(key).get<std::vector<double>>();
    if (a.size() != 2) throw std::runtime_error(std::string("config: '") + key + "' must have 2 entries");
    v = Vec2(a[0], a[1]);
  }
}

void get_rect(const json& j, const char* key, Rectangle& r) {
  if (j.contains(key)) {
    const json& o = j.at(key);
    expect_keys(o, {"min", "max"}, key);
    get_vec2(o, "min", r.min);
    get_vec2(o, "max", r.max);
  }
}

template <std::size_t N>
void get_arr(const json& j, const char* key, std::array<double, N>& v) {
  if (j.contains(key)) {
    auto a = j.at(key).get<std::vector<double>>();
    if (a.size() != N) {
      throw std::runtime_error(std::string("config: '") + key + "' must have " +
                               std::to_string(N) + " entries");
    }
    for (std::size_t i = 0; i < N; ++i) v[i] = a[i];
  }
}

json rect_json(const Rectangle& r) {
  return json{{"min", {r.min.x(), r.min.y()}}, {"max", {r.max.x(), r.max.y()}}};
}

json vec2_json(const Vec2& v) { return json::array({v.x(), v.y()}); }

void parse_court(const json& j, CourtConfig& c) {
  expect_keys(j, {"length", "width", "net_height", "success_region", "plain_translation"}, "court");
  get_to(j, "length", c.length);
  get_to(j, "width", c.width);
  get_to(j, "net_height", c.net_height);
  get_rect(j, "success_region", c.success_region);
  get_to(j, "plain_translation", c.plain_translation);
}

void parse_flight(const json& j, FlightConfig& c) {
  expect_keys(j, {"mass", "drag_coeff", "gravity", "dt"}, "flight");
  get_to(j, "mass", c.mass);
  get_to(j, "drag_coeff", c.drag_coeff);
  get_to(j, "gravity", c.gravity);
  get_to(j, "dt", c.dt);
}

void parse_racket(const json& j, RacketConfig& c) {
  expect_keys(j, {"radius", "restitution", "speed_limit"}, "racket");
  get_to(j, "radius", c.radius);
  get_to(j, "restitution", c.restitution);
  get_to(j, "speed_limit", c.speed_limit);
}

void parse_arm(const json& j, ArmConfig& c) {
  expect_keys(j,
              {"base_height", "shoulder_offset", "upper_link", "forearm_link",
               "wrist_offset1", "wrist_offset2", "racket_shaft", "joint_lo",
               "joint_hi", "vel_limit", "ik_seed", "ik_damping", "ik_max_iters"},
              "arm");
  get_to(j, "base_height", c.base_height);
  get_to(j, "shoulder_offset", c.shoulder_offset);
  get_to(j, "upper_link", c.upper_link);
  get_to(j, "forearm_link", c.forearm_link);
  get_to(j, "wrist_offset1", c.wrist_offset1);
  get_to(j, "wrist_offset2", c.wrist_offset2);
  get_to(j, "racket_shaft", c.racket_shaft);
  get_arr(j, "joint_lo", c.joint_lo);
  get_arr(j, "joint_hi", c.joint_hi);
  get_arr(j, "vel_limit", c.vel_limit);
  get_arr(j, "ik_seed", c.ik_seed);
  get_to(j, "ik_damping", c.ik_damping);
  get_to(j, "ik_max_iters", c.ik_max_iters);
}

void parse_chassis(const json& j, ChassisConfig& c) {
  expect_keys(j,
              {"v_max", "a_max", "kp", "yaw_rate_max", "yaw_speed_gate",
               "noise_sigma_rel", "start", "start_alpha"},
              "chassis");
  get_to(j, "v_max", c.v_max);
  get_to(j, "a_max", c.a_max);
  get_to(j, "kp", c.kp);
  get_to(j, "yaw_rate_max", c.yaw_rate_max);
  get_to(j, "yaw_speed_gate", c.yaw_speed_gate);
  get_to(j, "noise_sigma_rel", c.noise_sigma_rel);
  get_vec2(j, "start", c.start);
  get_to(j, "start_alpha", c.start_alpha);
}

void parse_perception(const json& j, PerceptionConfig& c) {
  expect_keys(j,
              {"camera_rate_hz", "obs_sigma_m", "min_obs", "min_span_s",
               "window_max_obs", "k_lo_factor", "k_hi_factor", "lm_max_iters",
               "converged_rms"},
              "perception");
  get_to(j, "camera_rate_hz", c.camera_rate_hz);
  get_to(j, "obs_sigma_m", c.obs_sigma_m);
  get_to(j, "min_obs", c.min_obs);
  get_to(j, "min_span_s", c.min_span_s);
  get_to(j, "window_max_obs", c.window_max_obs);
  get_to(j, "k_lo_factor", c.k_lo_factor);
  get_to(j, "k_hi_factor", c.k_hi_factor);
  get_to(j, "lm_max_iters", c.lm_max_iters);
  get_to(j, "converged_rms", c.converged_rms);
}

void parse_strategy(const json& j, StrategyConfig& c) {
  expect_keys(j,
              {"H_b", "T_b", "T_init", "H_min", "H_max", "reach_radius",
               "reach_min", "stand_offset", "min_lead", "plan_freeze",
               "follow_through", "net_clearance", "aim_height_min",
               "out_speed_min", "out_speed_max", "target_landing"},
              "strategy");
  get_to(j, "H_b", c.H_b);
  get_to(j, "T_b", c.T_b);
  get_to(j, "T_init", c.T_init);
  get_to(j, "H_min", c.H_min);
  get_to(j, "H_max", c.H_max);
  get_to(j, "reach_radius", c.reach_radius);
  get_to(j, "reach_min", c.reach_min);
  get_to(j, "stand_offset", c.stand_offset);
  get_to(j, "min_lead", c.min_lead);
  get_to(j, "plan_freeze", c.plan_freeze);
  get_to(j, "follow_through", c.follow_through);
  get_to(j, "net_clearance", c.net_clearance);
  get_to(j, "aim_height_min", c.aim_height_min);
  get_to(j, "out_speed_min", c.out_speed_min);
  get_to(j, "out_speed_max", c.out_speed_max);
  get_vec2(j, "target_landing", c.target_landing);
}

void parse_reward(const json& j, RewardConfig& c) {
  expect_keys(j,
              {"w_hit", "w_success", "w_net_cross", "w_net_height",
               "w_ball_pos", "w_landing", "w_dyn_penalty", "w_unsafe_penalty",
               "ball_pos_scale", "net_height_scale", "thresholds"},
              "reward");
  get_to(j, "w_hit", c.w_hit);
  get_to(j, "w_success", c.w_success);
  get_to(j, "w_net_cross", c.w_net_cross);
  get_to(j, "w_net_height", c.w_net_height);
  get_to(j, "w_ball_pos", c.w_ball_pos);
  get_to(j, "w_landing", c.w_landing);
  get_to(j, "w_dyn_penalty", c.w_dyn_penalty);
  get_to(j, "w_unsafe_penalty", c.w_unsafe_penalty);
  get_to(j, "ball_pos_scale", c.ball_pos_scale);
  get_to(j, "net_height_scale", c.net_height_scale);
  if (j.contains("thresholds")) {
    const json& t = j.at("thresholds");
    expect_keys(t, {"accel_limit", "jerk_limit", "back_angle", "min_racket_height"},
                "reward.thresholds");
    get_arr(t, "accel_limit", c.thresholds.accel_limit);
    get_arr(t, "jerk_limit", c.thresholds.jerk_limit);
    get_to(t, "back_angle", c.thresholds.back_angle);
    get_to(t, "min_racket_height", c.thresholds.min_racket_height);
  }
}

void parse_neural(const json& j, NeuralConfig& c) {
  expect_keys(j,
              {"hidden", "history", "arm_dof", "log_std_init", "log_std_min",
               "log_std_max", "lr", "grad_clip", "hidden_init_scale",
               "out_init_scale", "obs_offset", "obs_scale"},
              "neural");
  get_to(j, "hidden", c.hidden);
  get_to(j, "history", c.history);
  get_to(j, "arm_dof", c.arm_dof);
  get_to(j, "log_std_init", c.log_std_init);
  get_to(j, "log_std_min", c.log_std_min);
  get_to(j, "log_std_max", c.log_std_max);
  get_to(j, "lr", c.lr);
  get_to(j, "grad_clip", c.grad_clip);
  get_to(j, "hidden_init_scale", c.hidden_init_scale);
  get_to(j, "out_init_scale", c.out_init_scale);
  get_to(j, "obs_offset", c.obs_offset);
  get_to(j, "obs_scale", c.obs_scale);
}

void parse_training(const json& j, TrainingConfig& c) {
  expect_keys(j,
              {"il_iters", "rl_iters", "gamma", "lambda_sup", "lambda_decay",
               "clip_eps", "epochs", "minibatch", "n_envs", "steps_per_env",
               "normalize_advantages", "returns_exclude_current", "beta_mix",
               "episode_timeout_s", "control_rate_hz", "threads", "source",
               "dataset_path"},
              "training");
  get_to(j, "il_iters", c.il_iters);
  get_to(j, "rl_iters", c.rl_iters);
  get_to(j, "gamma", c.gamma);
  get_to(j, "lambda_sup", c.lambda_sup);
  get_to(j, "lambda_decay", c.lambda_decay);
  get_to(j, "clip_eps", c.clip_eps);
  get_to(j, "epochs", c.epochs);
  get_to(j, "minibatch", c.minibatch);
  get_to(j, "n_envs", c.n_envs);
  get_to(j, "steps_per_env", c.steps_per_env);
  get_to(j, "normalize_advantages", c.normalize_advantages);
  get_to(j, "returns_exclude_current", c.returns_exclude_current);
  get_to(j, "beta_mix", c.beta_mix);
  get_to(j, "episode_timeout_s", c.episode_timeout_s);
  get_to(j, "control_rate_hz", c.control_rate_hz);
  get_to(j, "threads", c.threads);
  get_to(j, "source", c.source);
  get_to(j, "dataset_path", c.dataset_path);
}

void parse_sampler(const json& j, ScenarioSamplerConfig& c) {
  expect_keys(j, {"pos_x", "pos_y", "pos_z", "elevation_deg", "speed", "aim_y"},
              "sampler");
  get_vec2(j, "pos_x", c.pos_x);
  get_vec2(j, "pos_y", c.pos_y);
  get_to(j, "pos_z", c.pos_z);
  get_vec2(j, "elevation_deg", c.elevation_deg);
  get_vec2(j, "speed", c.speed);
  get_vec2(j, "aim_y", c.aim_y);
}

void parse_eval(const json& j, EvalConfig& c) {
  expect_keys(j,
              {"repeats", "opponent_error_rate", "opponent_aim_sigma",
               "max_rounds"},
              "eval");
  get_to(j, "repeats", c.repeats);
  get_to(j, "opponent_error_rate", c.opponent_error_rate);
  get_to(j, "opponent_aim_sigma", c.opponent_aim_sigma);
  get_to(j, "max_rounds", c.max_rounds);
}

void parse_data(const json& j, DataConfig& c) {
  expect_keys(j, {"translate_dx_max", "translate_dy_max"}, "data");
  get_to(j, "translate_dx_max", c.translate_dx_max);
  get_to(j, "translate_dy_max", c.translate_dy_max);
}

json dump_config(const RunConfig& c) {
  json j;
  j["court"] = {{"length", c.court.length},
                {"width", c.court.width},
                {"net_height", c.court.net_height},
                {"success_region", rect_json(c.court.success_region)},
                {"plain_translation", c.court.plain_translation}};
  j["flight"] = {{"mass", c.flight.mass},
                 {"drag_coeff", c.flight.drag_coeff},
                 {"gravity", c.flight.gravity},
                 {"dt", c.flight.dt}};
  j["racket"] = {{"radius", c.racket.radius},
                 {"restitution", c.racket.restitution},
                 {"speed_limit", c.racket.speed_limit}};
  j["arm"] = {{"base_height", c.arm.base_height},
              {"shoulder_offset", c.arm.shoulder_offset},
              {"upper_link", c.arm.upper_link},
              {"forearm_link", c.arm.forearm_link},
              {"wrist_offset1", c.arm.wrist_offset1},
              {"wrist_offset2", c.arm.wrist_offset2},
              {"racket_shaft", c.arm.racket_shaft},
              {"joint_lo", c.arm.joint_lo},
              {"joint_hi", c.arm.joint_hi},
              {"vel_limit", c.arm.vel_limit},
              {"ik_seed", c.arm.ik_seed},
              {"ik_damping", c.arm.ik_damping},
              {"ik_max_iters", c.arm.ik_max_iters}};
  j["chassis"] = {{"v_max", c.chassis.v_max},
                  {"a_max", c.chassis.a_max},
                  {"kp", c.chassis.kp},
                  {"yaw_rate_max", c.chassis.yaw_rate_max},
                  {"yaw_speed_gate", c.chassis.yaw_speed_gate},
                  {"noise_sigma_rel", c.chassis.noise_sigma_rel},
                  {"start", vec2_json(c.chassis.start)},
                  {"start_alpha", c.chassis.start_alpha}};
  j["perception"] = {{"camera_rate_hz", c.perception.camera_rate_hz},
                     {"obs_sigma_m", c.perception.obs_sigma_m},
                     {"min_obs", c.perception.min_obs},
                     {"min_span_s", c.perception.min_span_s},
                     {"window_max_obs", c.perception.window_max_obs},
                     {"k_lo_factor", c.perception.k_lo_factor},
                     {"k_hi_factor", c.perception.k_hi_factor},
                     {"lm_max_iters", c.perception.lm_max_iters},
                     {"converged_rms", c.perception.converged_rms}};
  j["strategy"] = {{"H_b", c.strategy.H_b},
                   {"T_b", c.strategy.T_b},
                   {"T_init", c.strategy.T_init},
                   {"H_min", c.strategy.H_min},
                   {"H_max", c.strategy.H_max},
                   {"reach_radius", c.strategy.reach_radius},
                   {"reach_min", c.strategy.reach_min},
                   {"stand_offset", c.strategy.stand_offset},
                   {"min_lead", c.strategy.min_lead},
                   {"plan_freeze", c.strategy.plan_freeze},
                   {"follow_through", c.strategy.follow_through},
                   {"net_clearance", c.strategy.net_clearance},
                   {"aim_height_min", c.strategy.aim_height_min},
                   {"out_speed_min", c.strategy.out_speed_min},
                   {"out_speed_max", c.strategy.out_speed_max},
                   {"target_landing", vec2_json(c.strategy.target_landing)}};
  j["reward"] = {{"w_hit", c.reward.w_hit},
                 {"w_success", c.reward.w_success},
                 {"w_net_cross", c.reward.w_net_cross},
                 {"w_net_height", c.reward.w_net_height},
                 {"w_ball_pos", c.reward.w_ball_pos},
                 {"w_landing", c.reward.w_landing},
                 {"w_dyn_penalty", c.reward.w_dyn_penalty},
                 {"w_unsafe_penalty", c.reward.w_unsafe_penalty},
                 {"ball_pos_scale", c.reward.ball_pos_scale},
                 {"net_height_scale", c.reward.net_height_scale},
                 {"thresholds",
                  {{"accel_limit", c.reward.thresholds.accel_limit},
                   {"jerk_limit", c.reward.thresholds.jerk_limit},
                   {"back_angle", c.reward.thresholds.back_angle},
                   {"min_racket_height", c.reward.thresholds.min_racket_height}}}};
  j["neural"] = {{"hidden", c.neural.hidden},
                 {"history", c.neural.history},
                 {"arm_dof", c.neural.arm_dof},
                 {"log_std_init", c.neural.log_std_init},
                 {"log_std_min", c.neural.log_std_min},
                 {"log_std_max", c.neural.log_std_max},
                 {"lr", c.neural.lr},
                 {"grad_clip", c.neural.grad_clip},
                 {"hidden_init_scale", c.neural.hidden_init_scale},
                 {"out_init_scale", c.neural.out_init_scale},
                 {"obs_offset", c.neural.obs_offset},
                 {"obs_scale", c.neural.obs_scale}};
  j["training"] = {{"il_iters", c.training.il_iters},
                   {"rl_iters", c.training.rl_iters},
                   {"gamma", c.training.gamma},
                   {"lambda_sup", c.training.lambda_sup},
                   {"lambda_decay", c.training.lambda_decay},
                   {"clip_eps", c.training.clip_eps},
                   {"epochs", c.training.epochs},
                   {"minibatch", c.training.minibatch},
                   {"n_envs", c.training.n_envs},
                   {"steps_per_env", c.training.steps_per_env},
                   {"normalize_advantages", c.training.normalize_advantages},
                   {"returns_exclude_current", c.training.returns_exclude_current},
                   {"beta_mix", c.training.beta_mix},
                   {"episode_timeout_s", c.training.episode_timeout_s},
                   {"control_rate_hz", c.training.control_rate_hz},
                   {"threads", c.training.threads},
                   {"source", c.training.source},
                   {"dataset_path", c.training.dataset_path}};
  j["sampler"] = {{"pos_x", vec2_json(c.sampler.pos_x)},
                  {"pos_y", vec2_json(c.sampler.pos_y)},
                  {"pos_z", c.sampler.pos_z},
                  {"elevation_deg", vec2_json(c.sampler.elevation_deg)},
                  {"speed", vec2_json(c.sampler.speed)},
                  {"aim_y", vec2_json(c.sampler.aim_y)}};
  j["eval"] = {{"repeats", c.eval.repeats},
               {"opponent_error_rate", c.eval.opponent_error_rate},
               {"opponent_aim_sigma", c.eval.opponent_aim_sigma},
               {"max_rounds", c.eval.max_rounds}};
  j["data"] = {{"translate_dx_max", c.data.translate_dx_max},
               {"translate_dy_max", c.data.translate_dy_max}};
  j["seed"] = c.seed;
  return j;
}

}  // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("config: JSON parse error: ") + e.what());
  }
  RunConfig c;
  expect_keys(j,
              {"court", "flight", "racket", "arm", "chassis", "perception",
               "strategy", "reward", "neural", "training", "sampler", "eval",
               "data", "seed"},
              "<root>");
  try {
    if (j.contains("court")) parse_court(j["court"], c.court);
    if (j.contains("flight")) parse_flight(j["flight"], c.flight);
    if (j.contains("racket")) parse_racket(j["racket"], c.racket);
    if (j.contains("arm")) parse_arm(j["arm"], c.arm);
    if (j.contains("chassis")) parse_chassis(j["chassis"], c.chassis);
    if (j.contains("perception")) parse_perception(j["perception"], c.perception);
    if (j.contains("strategy")) parse_strategy(j["strategy"], c.strategy);
    if (j.contains("reward")) parse_reward(j["reward"], c.reward);
    if (j.contains("neural")) parse_neural(j["neural"], c.neural);
    if (j.contains("training")) parse_training(j["training"], c.training);
    if (j.contains("sampler")) parse_sampler(j["sampler"], c.sampler);
    if (j.contains("eval")) parse_eval(j["eval"], c.eval);
    if (j.contains("data")) parse_data(j["data"], c.data);
    if (j.contains("seed")) j.at("seed").get_to(c.seed);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("config: ") + e.what());
  }
  return c;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::string RunConfig::to_json_text() const {
  return dump_config(*this).dump(2);
}

void RunConfig::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("config: cannot write '" + path + "'");
  out << to_json_text() << "\n";
}

std::uint64_t RunConfig::hash() const {
  const std::string s = dump_config(*this).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string config_hash_hex(const RunConfig& cfg) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(cfg.hash()));
  return std::string(buf);
}

}  // namespace sbot
