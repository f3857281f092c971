/**
 * @file service.hpp
 * @brief HTTP/JSON front for cabinet storage, optimization jobs and edits.
 *
 *   POST /cabinets                          store a document        -> 201 {cabinetId, version}
 *   GET  /cabinets/{id}                     latest document         -> 200
 *   PUT  /cabinets/{id}/components/{index}  edit one component      -> 200 new document version
 *   POST /cabinets/{id}/optimize            enqueue (warm) run      -> 202 {jobId}
 *   GET  /jobs/{id}                         job snapshot            -> 200
 *
 * Documents live in memory; every edit appends a version. Jobs run on a
 * fixed pool of workers and never share engine state.
 */

#ifndef CABINET_SERVICE_HPP
#define CABINET_SERVICE_HPP

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cabinet/io.hpp"
#include "cabinet/psa.hpp"

namespace httplib {
class Server;
}

namespace cabinet {

enum class JobState { Queued, Running, Done, Failed };

const char* to_string(JobState state);

struct ServiceOptions {
    std::size_t workers = 2;
    std::string cors_origin = "*";
    std::string snapshot_path;  ///< written on shutdown when non-empty
};

/// A plain HTTP exchange, independent of the transport.
struct ServiceResponse {
    int status = 200;
    std::string body;
    std::map<std::string, std::string> headers;
};

class CabinetService {
public:
    explicit CabinetService(ServiceOptions options = {});
    ~CabinetService();

    CabinetService(const CabinetService&) = delete;
    CabinetService& operator=(const CabinetService&) = delete;

    ServiceResponse create_cabinet(const std::string& body);
    ServiceResponse get_cabinet(const std::string& cabinet_id) const;
    ServiceResponse edit_component(const std::string& cabinet_id, const std::string& index,
                                   const std::string& body);
    ServiceResponse optimize(const std::string& cabinet_id, const std::string& body);
    ServiceResponse get_job(const std::string& job_id) const;

    /// Register the routes (and CORS handling) on `server`.
    void mount(httplib::Server& server);

    /// Stop the workers after the running jobs finish; queued jobs fail.
    void shutdown();

private:
    struct Job {
        std::string id;
        std::string cabinet_id;
        std::size_t cabinet_version = 0;
        PsaConfig config;
        std::optional<std::string> warm_from;
        std::optional<Layout> warm_layout;
        JobState state = JobState::Queued;
        std::string result_json;  ///< serialized result incl. svg, when done
        std::optional<Layout> recommended;
        std::string error;
    };

    void worker_loop();
    void execute(const std::string& job_id);
    std::string job_json(const Job& job) const;
    void write_snapshot() const;

    ServiceOptions options_;
    mutable std::mutex mutex_;
    std::condition_variable wake_;
    std::map<std::string, std::vector<CabinetDocument>> cabinets_;
    std::map<std::string, Job> jobs_;
    std::deque<std::string> queue_;
    std::uint64_t next_cabinet_ = 1;
    std::uint64_t next_job_ = 1;
    bool stopping_ = false;
    std::vector<std::thread> workers_;
};

/// Owns a listening socket bound to `host:port` and the service behind it.
class CabinetServer {
public:
    explicit CabinetServer(ServiceOptions options = {});
    ~CabinetServer();

    /// Bind; port 0 picks a free port. Returns the bound port or -1.
    int bind(const std::string& host, int port);
    /// Blocks until stop().
    bool listen_after_bind();
    void stop();

    CabinetService& service() noexcept { return *service_; }

private:
    std::unique_ptr<httplib::Server> server_;
    std::unique_ptr<CabinetService> service_;
};

}  // namespace cabinet

#endif  // CABINET_SERVICE_HPP
