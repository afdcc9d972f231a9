#include "vqm/lane_runner.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "vqm/errors.hpp"
#include "vqm/serializer.hpp"
#include "vqm/synthetic.hpp"

namespace vqm {

namespace {

// Per-lane input queue. A slot is occupied from the moment the distributor
// reserves it (before reading the frame from the source) until the worker
// releases it (after the frame is fully processed), so frames resident
// anywhere in the pipeline never exceed lanes * capacity.
class FrameQueue {
public:
    explicit FrameQueue(std::size_t capacity) : capacity_(capacity) {}

    // Blocks until a slot is free, then claims it.
    void reserve_slot() {
        std::unique_lock lk(m_);
        has_space_.wait(lk, [&] { return occupied_ < capacity_; });
        ++occupied_;
    }

    // Fills a previously reserved slot. nullopt is the end-of-stream mark.
    void push_reserved(std::optional<Frame> item) {
        {
            std::lock_guard lk(m_);
            q_.push_back(std::move(item));
        }
        has_item_.notify_one();
    }

    // Blocks until an item is available and takes it. The slot stays
    // occupied until release().
    std::optional<Frame> take() {
        std::unique_lock lk(m_);
        has_item_.wait(lk, [&] { return !q_.empty(); });
        std::optional<Frame> item = std::move(q_.front());
        q_.pop_front();
        return item;
    }

    void release() {
        {
            std::lock_guard lk(m_);
            --occupied_;
        }
        has_space_.notify_one();
    }

private:
    std::mutex m_;
    std::condition_variable has_space_;
    std::condition_variable has_item_;
    std::deque<std::optional<Frame>> q_;
    std::size_t occupied_ = 0;
    std::size_t capacity_;
};

struct ResultMsg {
    enum class Kind { Result, LaneDone, LaneError } kind = Kind::Result;
    FrameResult result;      // Kind::Result
    std::uint64_t frame = 0; // Kind::LaneError
    std::string error;       // Kind::LaneError
};

// Unbounded worker -> collector channel. Results are a few dozen bytes,
// so the frame queues alone bound the pipeline's memory.
class ResultChannel {
public:
    void push(ResultMsg msg) {
        {
            std::lock_guard lk(m_);
            q_.push_back(std::move(msg));
        }
        has_item_.notify_one();
    }

    ResultMsg pop() {
        std::unique_lock lk(m_);
        has_item_.wait(lk, [&] { return !q_.empty(); });
        ResultMsg msg = std::move(q_.front());
        q_.pop_front();
        return msg;
    }

private:
    std::mutex m_;
    std::condition_variable has_item_;
    std::deque<ResultMsg> q_;
};

void lane_worker(FrameQueue& in, ResultChannel& out, EngineConfig cfg, std::atomic<bool>& abort) {
    std::optional<Engine> engine;
    std::vector<DataWord> words;
    bool failed = false;
    for (;;) {
        std::optional<Frame> frame = in.take();
        if (!frame) {
            in.release();
            break;
        }
        if (!failed && !abort.load(std::memory_order_relaxed)) {
            try {
                if (!engine || !(engine->geometry().res == frame->res)) {
                    engine.emplace(grid_geometry(frame->res), cfg);
                }
                words.clear();
                serialize_frame(*frame, words);
                FrameResult r;
                r.record = engine->process(words);
                r.metrics = record_to_metrics(r.record, engine->geometry(), frame->index);
                out.push({ResultMsg::Kind::Result, std::move(r), 0, {}});
            } catch (const std::exception& e) {
                failed = true;
                abort.store(true, std::memory_order_relaxed);
                out.push({ResultMsg::Kind::LaneError, {}, frame->index, e.what()});
            }
        }
        in.release();
    }
    out.push({ResultMsg::Kind::LaneDone, {}, 0, {}});
}

}  // namespace

RunSummary run_pipeline(FrameSource& src, const LaneConfig& cfg, const MetricsSink& sink) {
    if (cfg.lanes < 1 || cfg.queue_capacity < 1) {
        throw Error("lane config: lanes and queue_capacity must be at least 1");
    }
    const auto start = std::chrono::steady_clock::now();

    std::deque<FrameQueue> queues;
    for (std::uint32_t i = 0; i < cfg.lanes; ++i) {
        queues.emplace_back(cfg.queue_capacity);
    }
    ResultChannel results;
    std::atomic<bool> abort{false};

    std::vector<std::thread> workers;
    workers.reserve(cfg.lanes);
    for (std::uint32_t i = 0; i < cfg.lanes; ++i) {
        workers.emplace_back(lane_worker, std::ref(queues[i]), std::ref(results), cfg.engine,
                             std::ref(abort));
    }

    std::exception_ptr ingest_error;
    std::thread distributor([&] {
        std::uint64_t index = 0;
        std::optional<std::uint32_t> got_mark;  // lane already sent end-of-stream
        for (;;) {
            if (abort.load(std::memory_order_relaxed)) break;
            const std::uint32_t lane = static_cast<std::uint32_t>(index % cfg.lanes);
            FrameQueue& q = queues[lane];
            q.reserve_slot();
            std::optional<Frame> frame;
            try {
                frame = src.next();
            } catch (...) {
                ingest_error = std::current_exception();
                q.push_reserved(std::nullopt);
                got_mark = lane;
                break;
            }
            if (!frame) {
                q.push_reserved(std::nullopt);
                got_mark = lane;
                break;
            }
            frame->index = index;
            q.push_reserved(std::move(frame));
            ++index;
        }
        for (std::uint32_t i = 0; i < cfg.lanes; ++i) {
            if (got_mark && *got_mark == i) continue;
            queues[i].reserve_slot();
            queues[i].push_reserved(std::nullopt);
        }
    });

    // Collector: in-order release keyed by frame index.
    std::map<std::uint64_t, FrameResult> pending;
    std::uint64_t next_index = 0;
    std::uint64_t delivered = 0;
    std::uint32_t lanes_done = 0;
    std::optional<std::pair<std::uint64_t, std::string>> lane_failure;
    while (lanes_done < cfg.lanes) {
        ResultMsg msg = results.pop();
        switch (msg.kind) {
            case ResultMsg::Kind::Result: {
                pending.emplace(msg.result.metrics.frame_index, std::move(msg.result));
                for (auto it = pending.find(next_index); it != pending.end();
                     it = pending.find(next_index)) {
                    if (sink) sink(it->second);
                    pending.erase(it);
                    ++next_index;
                    ++delivered;
                }
                break;
            }
            case ResultMsg::Kind::LaneDone:
                ++lanes_done;
                break;
            case ResultMsg::Kind::LaneError:
                if (!lane_failure || msg.frame < lane_failure->first) {
                    lane_failure = {msg.frame, std::move(msg.error)};
                }
                break;
        }
    }

    distributor.join();
    for (auto& w : workers) w.join();

    if (ingest_error) std::rethrow_exception(ingest_error);
    if (lane_failure) {
        throw Error("lane failed at frame " + std::to_string(lane_failure->first) + ": " +
                    lane_failure->second);
    }

    RunSummary summary;
    summary.frames = delivered;
    summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

BenchReport benchmark(const std::vector<Resolution>& resolutions,
                      const std::vector<std::uint32_t>& lanes_list,
                      std::uint64_t frames_per_point, std::uint64_t seed,
                      std::uint32_t queue_capacity) {
    BenchReport report;
    for (const Resolution res : resolutions) {
        for (const std::uint32_t lanes : lanes_list) {
            SyntheticSource src(res, frames_per_point, seed, SyntheticKind::Random);
            LaneConfig cfg;
            cfg.lanes = lanes;
            cfg.queue_capacity = queue_capacity;
            const RunSummary sum = run_pipeline(src, cfg, nullptr);
            BenchRow row;
            row.res = res;
            row.lanes = lanes;
            row.frames = sum.frames;
            row.seconds = sum.seconds;
            row.fps = sum.seconds > 0.0 ? static_cast<double>(sum.frames) / sum.seconds : 0.0;
            const double plane = static_cast<double>(res.width) * static_cast<double>(res.height);
            row.bytes_per_second = row.fps * plane;
            row.real_time = row.fps >= kRealTimeFps;
            report.rows.push_back(row);
        }
    }
    return report;
}

}  // namespace vqm
