#include "cabinet/service.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "httplib.h"
#include "json.hpp"

namespace cabinet {

using nlohmann::json;
using nlohmann::ordered_json;

const char* to_string(JobState state) {
    switch (state) {
        case JobState::Queued: return "queued";
        case JobState::Running: return "running";
        case JobState::Done: return "done";
        case JobState::Failed: return "failed";
    }
    return "unknown";
}

namespace {

ServiceResponse json_response(int status, const ordered_json& body) {
    return ServiceResponse{status, body.dump(), {}};
}

ServiceResponse error_response(int status, const std::string& message) {
    return json_response(status, ordered_json{{"error", message}});
}

std::optional<json> parse_body(const std::string& body) {
    if (body.empty()) {
        return json::object();
    }
    try {
        return json::parse(body);
    } catch (const json::parse_error&) {
        return std::nullopt;
    }
}

std::optional<ComponentIndex> parse_component_index(const std::string& text) {
    ComponentIndex v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        return std::nullopt;
    }
    return v;
}

/// Overrides on top of the defaults; throws InvalidConfig for bad values.
PsaConfig config_from_json(const json& body) {
    PsaConfig c;
    auto number = [&](const char* key) -> std::optional<double> {
        const auto it = body.find(key);
        if (it == body.end()) {
            return std::nullopt;
        }
        if (!it->is_number()) {
            throw InvalidConfig(std::string("InvalidConfig: ") + key + " must be a number");
        }
        return it->get<double>();
    };
    auto count = [&](const char* key) -> std::optional<std::uint64_t> {
        const auto it = body.find(key);
        if (it == body.end()) {
            return std::nullopt;
        }
        if (!it->is_number_unsigned()) {
            throw InvalidConfig(std::string("InvalidConfig: ") + key +
                                " must be a non-negative integer");
        }
        return it->get<std::uint64_t>();
    };
    static const char* const known[] = {"initialTemperature", "coolingRate",    "stepsPerTemperature",
                                        "generatingSetSize",  "weightConstant", "weightFloor",
                                        "swapProbability",    "seed",           "warmFrom"};
    for (const auto& [key, _] : body.items()) {
        if (std::find_if(std::begin(known), std::end(known),
                         [&](const char* k) { return key == k; }) == std::end(known)) {
            throw InvalidConfig("InvalidConfig: unknown field '" + key + "'");
        }
    }
    if (auto v = number("initialTemperature")) c.initial_temperature = *v;
    if (auto v = number("coolingRate")) c.cooling_rate = *v;
    if (auto v = count("stepsPerTemperature")) c.steps_per_temperature = static_cast<std::uint32_t>(*v);
    if (auto v = count("generatingSetSize")) c.generating_set_size = static_cast<std::uint32_t>(*v);
    if (auto v = number("weightConstant")) c.weight_constant = *v;
    if (auto v = number("weightFloor")) c.weight_floor = *v;
    if (auto v = number("swapProbability")) c.swap_probability = *v;
    if (auto v = count("seed")) c.rng_seed = *v;
    validate(c);
    return c;
}

ComponentEdit edit_from_json(const json& body) {
    if (!body.is_object()) {
        throw ParseError(0, 0, "$", "expected an object");
    }
    ComponentEdit edit;
    for (const auto& [key, value] : body.items()) {
        auto real = [&]() {
            if (!value.is_number()) {
                throw ParseError(0, 0, key, "expected a number");
            }
            return value.get<double>();
        };
        if (key == "widthMm") {
            edit.width_mm = real();
        } else if (key == "heightMm") {
            edit.height_mm = real();
        } else if (key == "depthMm") {
            edit.depth_mm = real();
        } else if (key == "isHot") {
            if (value.is_boolean()) {
                edit.is_hot = value.get<bool>();
            } else if (value.is_number_integer() &&
                       (value.get<std::int64_t>() == 0 || value.get<std::int64_t>() == 1)) {
                edit.is_hot = value.get<std::int64_t>() == 1;
            } else {
                throw ParseError(0, 0, key, "expected true/false or 0/1");
            }
        } else if (key == "connectsTo") {
            if (!value.is_array()) {
                throw ParseError(0, 0, key, "expected an array of component indices");
            }
            std::vector<ComponentIndex> targets;
            for (const auto& t : value) {
                if (!t.is_number_unsigned()) {
                    throw ParseError(0, 0, key, "expected an array of component indices");
                }
                targets.push_back(t.get<ComponentIndex>());
            }
            edit.connects_to = std::move(targets);
        } else {
            throw ParseError(0, 0, key, "field cannot be edited");
        }
    }
    return edit;
}

}  // namespace

CabinetService::CabinetService(ServiceOptions options) : options_(std::move(options)) {
    const std::size_t workers = std::max<std::size_t>(1, options_.workers);
    for (std::size_t i = 0; i < workers; ++i) {
        workers_.emplace_back([this] { worker_loop(); });
    }
}

CabinetService::~CabinetService() { shutdown(); }

void CabinetService::shutdown() {
    {
        std::lock_guard lock(mutex_);
        if (stopping_ && workers_.empty()) {
            return;
        }
        stopping_ = true;
    }
    wake_.notify_all();
    for (auto& t : workers_) {
        if (t.joinable()) {
            t.join();
        }
    }
    workers_.clear();
    std::lock_guard lock(mutex_);
    for (const auto& id : queue_) {
        jobs_[id].state = JobState::Failed;
        jobs_[id].error = "service shut down before the job started";
    }
    queue_.clear();
    if (!options_.snapshot_path.empty()) {
        write_snapshot();
    }
}

void CabinetService::write_snapshot() const {
    ordered_json root;
    root["cabinets"] = ordered_json::object();
    for (const auto& [id, versions] : cabinets_) {
        ordered_json list = ordered_json::array();
        for (const auto& doc : versions) {
            list.push_back(ordered_json::parse(write_components_json(doc)));
        }
        root["cabinets"][id] = std::move(list);
    }
    std::ofstream(options_.snapshot_path) << root.dump(2) << '\n';
}

ServiceResponse CabinetService::create_cabinet(const std::string& body) {
    CabinetDocument doc;
    try {
        doc = parse_components_json(body);
    } catch (const ParseError& e) {
        return error_response(400, e.what());
    }
    std::lock_guard lock(mutex_);
    const std::string id = "cab-" + std::to_string(next_cabinet_++);
    cabinets_[id].push_back(std::move(doc));
    return json_response(201, ordered_json{{"cabinetId", id}, {"version", 0}});
}

ServiceResponse CabinetService::get_cabinet(const std::string& cabinet_id) const {
    std::lock_guard lock(mutex_);
    const auto it = cabinets_.find(cabinet_id);
    if (it == cabinets_.end()) {
        return error_response(404, "unknown cabinet '" + cabinet_id + "'");
    }
    ServiceResponse r{200, write_components_json(it->second.back()), {}};
    r.headers["X-Cabinet-Version"] = std::to_string(it->second.size() - 1);
    return r;
}

ServiceResponse CabinetService::edit_component(const std::string& cabinet_id,
                                               const std::string& index_text,
                                               const std::string& body) {
    const auto parsed = parse_body(body);
    if (!parsed) {
        return error_response(400, "request body is not valid JSON");
    }
    std::lock_guard lock(mutex_);
    const auto it = cabinets_.find(cabinet_id);
    if (it == cabinets_.end()) {
        return error_response(404, "unknown cabinet '" + cabinet_id + "'");
    }
    const auto index = parse_component_index(index_text);
    const CabinetDocument& current = it->second.back();
    if (!index || *index < 1 || *index > current.components.size()) {
        return error_response(404, "unknown component '" + index_text + "'");
    }
    try {
        CabinetDocument updated = apply_edit(current, *index, edit_from_json(*parsed));
        it->second.push_back(std::move(updated));
    } catch (const Error& e) {
        return error_response(400, e.what());
    }
    ServiceResponse r{200, write_components_json(it->second.back()), {}};
    r.headers["X-Cabinet-Version"] = std::to_string(it->second.size() - 1);
    return r;
}

ServiceResponse CabinetService::optimize(const std::string& cabinet_id, const std::string& body) {
    const auto parsed = parse_body(body);
    if (!parsed || !parsed->is_object()) {
        return error_response(400, "request body must be a JSON object");
    }
    PsaConfig config;
    try {
        config = config_from_json(*parsed);
    } catch (const InvalidConfig& e) {
        return error_response(400, e.what());
    }

    std::unique_lock lock(mutex_);
    const auto cab = cabinets_.find(cabinet_id);
    if (cab == cabinets_.end()) {
        return error_response(404, "unknown cabinet '" + cabinet_id + "'");
    }
    Job job;
    if (const auto w = parsed->find("warmFrom"); w != parsed->end()) {
        if (!w->is_string()) {
            return error_response(400, "warmFrom must be a job id");
        }
        const auto prev = jobs_.find(w->get<std::string>());
        if (prev == jobs_.end()) {
            return error_response(404, "unknown job '" + w->get<std::string>() + "'");
        }
        if (prev->second.state != JobState::Done) {
            return error_response(400, "job '" + prev->first + "' is not done");
        }
        if (prev->second.cabinet_id != cabinet_id) {
            return error_response(400, "job '" + prev->first + "' belongs to another cabinet");
        }
        job.warm_from = prev->first;
        job.warm_layout = prev->second.recommended;
    }
    job.id = "job-" + std::to_string(next_job_++);
    job.cabinet_id = cabinet_id;
    job.cabinet_version = cab->second.size() - 1;
    job.config = config;
    const std::string id = job.id;
    if (stopping_) {
        return error_response(503, "service is shutting down");
    }
    jobs_.emplace(id, std::move(job));
    queue_.push_back(id);
    lock.unlock();
    wake_.notify_one();
    return json_response(202, ordered_json{{"jobId", id}});
}

ServiceResponse CabinetService::get_job(const std::string& job_id) const {
    std::lock_guard lock(mutex_);
    const auto it = jobs_.find(job_id);
    if (it == jobs_.end()) {
        return error_response(404, "unknown job '" + job_id + "'");
    }
    return ServiceResponse{200, job_json(it->second), {}};
}

std::string CabinetService::job_json(const Job& job) const {
    ordered_json j;
    j["jobId"] = job.id;
    j["cabinetId"] = job.cabinet_id;
    j["cabinetVersion"] = job.cabinet_version;
    j["state"] = to_string(job.state);
    j["warmFrom"] = job.warm_from ? ordered_json(*job.warm_from) : ordered_json(nullptr);
    j["result"] = job.state == JobState::Done ? ordered_json::parse(job.result_json)
                                              : ordered_json(nullptr);
    j["error"] = job.state == JobState::Failed ? ordered_json(job.error) : ordered_json(nullptr);
    return j.dump();
}

void CabinetService::worker_loop() {
    while (true) {
        std::string id;
        {
            std::unique_lock lock(mutex_);
            wake_.wait(lock, [&] { return stopping_ || !queue_.empty(); });
            if (stopping_) {
                return;
            }
            id = queue_.front();
            queue_.pop_front();
            jobs_[id].state = JobState::Running;
        }
        execute(id);
    }
}

void CabinetService::execute(const std::string& job_id) {
    CabinetDocument doc;
    PsaConfig config;
    std::optional<Layout> warm;
    {
        std::lock_guard lock(mutex_);
        const Job& job = jobs_.at(job_id);
        doc = cabinets_.at(job.cabinet_id).at(job.cabinet_version);
        config = job.config;
        warm = job.warm_layout;
    }

    std::string result_json;
    std::string error;
    Layout recommended;
    try {
        const EvaluationContext ctx(doc.components, doc.cabinet);
        const OptimizationResult result = warm ? run_warm(config, ctx, *warm) : run(config, ctx);
        ordered_json j = ordered_json::parse(write_result_json(result));
        j["svg"] = render_svg(result.recommended.placement, ctx.components(),
                              result.recommended.objectives);
        result_json = j.dump();
        recommended = result.recommended.layout;
    } catch (const std::exception& e) {
        error = e.what();
    }

    std::lock_guard lock(mutex_);
    Job& job = jobs_.at(job_id);
    if (error.empty()) {
        job.result_json = std::move(result_json);
        job.recommended = std::move(recommended);
        job.state = JobState::Done;
    } else {
        job.error = std::move(error);
        job.state = JobState::Failed;
    }
}

void CabinetService::mount(httplib::Server& server) {
    auto reply = [](httplib::Response& res, const ServiceResponse& r) {
        res.status = r.status;
        for (const auto& [k, v] : r.headers) {
            res.set_header(k, v);
        }
        res.set_content(r.body, "application/json");
    };

    server.set_default_headers({{"Access-Control-Allow-Origin", options_.cors_origin},
                                {"Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"},
                                {"Access-Control-Expose-Headers", "X-Cabinet-Version"}});
    server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

    server.Post("/cabinets", [this, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, create_cabinet(req.body));
    });
    server.Get(R"(/cabinets/([^/]+))", [this, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, get_cabinet(req.matches[1]));
    });
    server.Put(R"(/cabinets/([^/]+)/components/([^/]+))",
               [this, reply](const httplib::Request& req, httplib::Response& res) {
                   reply(res, edit_component(req.matches[1], req.matches[2], req.body));
               });
    server.Post(R"(/cabinets/([^/]+)/optimize)",
                [this, reply](const httplib::Request& req, httplib::Response& res) {
                    reply(res, optimize(req.matches[1], req.body));
                });
    server.Get(R"(/jobs/([^/]+))", [this, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, get_job(req.matches[1]));
    });
}

CabinetServer::CabinetServer(ServiceOptions options)
    : server_(std::make_unique<httplib::Server>()),
      service_(std::make_unique<CabinetService>(std::move(options))) {
    service_->mount(*server_);
}

CabinetServer::~CabinetServer() {
    stop();
    service_->shutdown();
}

int CabinetServer::bind(const std::string& host, int port) {
    if (port == 0) {
        return server_->bind_to_any_port(host);
    }
    return server_->bind_to_port(host, port) ? port : -1;
}

bool CabinetServer::listen_after_bind() { return server_->listen_after_bind(); }

void CabinetServer::stop() { server_->stop(); }

}  // namespace cabinet
