#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "crownlab/cli.hpp"
#include "crownlab/coverage.hpp"
#include "crownlab/errors.hpp"
#include "crownlab/io.hpp"
#include "support.hpp"

using namespace crownlab;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "crownlab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("crownlab-test-" + std::to_string(support::uniform(0, 1 << 30)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

void write(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

}  // namespace

TEST(VertexNames, Families) {
    EXPECT_EQ(family_vertex_names({Family::Crown, 3, 2}),
              (std::vector<std::string>{"c0", "c1", "c2", "l0_1", "l0_2", "l1_1", "l1_2", "l2_1", "l2_2"}));
    EXPECT_EQ(family_vertex_names({Family::Cycle, 3, 0}), (std::vector<std::string>{"v1", "v2", "v3"}));
    EXPECT_EQ(family_vertex_names({Family::StarLoop, 0, 2}), (std::vector<std::string>{"c", "l1", "l2"}));
}

TEST(Certificate, JsonRoundTrip) {
    const ValenceCover cover = perfect_sem_cover(3, 5, 1);
    for (const auto& [v, cert] : cover.achieved) {
        const Json j = to_json(cert);
        const Certificate back = certificate_from_json(Json::parse(dump(j)));
        EXPECT_EQ(back.valence(), v);
        EXPECT_EQ(back.labeling.kind(), cert.labeling.kind());
        EXPECT_EQ(dump(to_json(back)), dump(j));
    }
}

TEST(Certificate, SortedKeysAndLf) {
    const Certificate cert = perfect_sem_cover(3, 5, 1).achieved.at(69);
    const std::string text = dump(to_json(cert));
    EXPECT_EQ(text.find('\r'), std::string::npos);
    EXPECT_EQ(text.back(), '\n');
    EXPECT_LT(text.find("\"edges\""), text.find("\"graph\""));
    EXPECT_LT(text.find("\"graph\""), text.find("\"kind\""));
    EXPECT_LT(text.find("\"kind\""), text.find("\"valence\""));
    EXPECT_LT(text.find("\"valence\""), text.find("\"vertices\""));
}

TEST(Certificate, TamperedEdgeIsNamed) {
    const Certificate cert = perfect_sem_cover(3, 5, 1).achieved.at(70);
    Json j = to_json(cert);
    j["edges"][4]["label"] = j["edges"][4]["label"].get<int>() + 1;
    const std::string name = j["edges"][4]["u"].get<std::string>() + "-" + j["edges"][4]["v"].get<std::string>();
    try {
        certificate_from_json(j);
        FAIL() << "expected InvalidCertificate";
    } catch (const InvalidCertificate& e) {
        EXPECT_NE(std::string(e.what()).find(name), std::string::npos) << e.what();
    }
}

TEST(Certificate, StructuralDefectsRejected) {
    const Json good = to_json(perfect_sem_cover(3, 5, 1).achieved.at(69));
    auto expect_bad = [](Json j) { EXPECT_THROW(certificate_from_json(j), InvalidCertificate); };
    Json j = good;
    j["kind"] = "edge-magic";
    expect_bad(j);
    j = good;
    j["valence"] = 70;
    expect_bad(j);
    j = good;
    j["vertices"][0]["id"] = "c99";
    expect_bad(j);
    j = good;
    j["edges"].erase(0);
    expect_bad(j);
    j = good;
    j["edges"][0]["v"] = j["edges"][0]["u"];
    expect_bad(j);
    j = good;
    j["graph"]["m"] = 4;
    expect_bad(j);
    j = good;
    j.erase("vertices");
    expect_bad(j);
    j = good;
    std::swap(j["vertices"][0]["label"], j["vertices"][1]["label"]);
    expect_bad(j);
}

TEST(Cli, Intervals) {
    const Outcome o = run_cli({"intervals", "--family", "crown", "--m", "15", "--n", "1", "--mode", "sem"});
    EXPECT_EQ(o.code, cli::kOk);
    EXPECT_EQ(Json::parse(o.out)["interval"], Json::array({69, 84}));
    const Outcome star = run_cli({"intervals", "--family", "star_loop", "--n", "3", "--mode", "em"});
    EXPECT_EQ(Json::parse(star.out)["interval"], Json::array({10, 17}));
}

TEST(Cli, CoverEm) {
    const Outcome o = run_cli({"cover", "--p", "3", "--q", "5", "--n", "1", "--mode", "em"});
    EXPECT_EQ(o.code, cli::kOk);
    const Json j = Json::parse(o.out);
    EXPECT_EQ(j["certificates"].size(), 46u);
    EXPECT_TRUE(j["missing"].empty());
    EXPECT_EQ(j["interval"], Json::array({69, 114}));
}

TEST(Cli, CoverOpenCaseExitsIncomplete) {
    const Outcome o = run_cli({"cover", "--p", "3", "--k", "2", "--q", "5", "--n", "1", "--mode", "sem"});
    EXPECT_EQ(o.code, cli::kIncomplete);
    EXPECT_FALSE(Json::parse(o.out)["missing"].empty());
}

TEST(Cli, VerifyTamperedCertificate) {
    TempDir dir;
    const Outcome gen = run_cli({"generate", "--m", "15", "--n", "1", "--valence", "75"});
    ASSERT_EQ(gen.code, cli::kOk);
    write(dir.file("good.json"), gen.out);
    EXPECT_EQ(run_cli({"verify", dir.file("good.json")}).code, cli::kOk);

    Json j = Json::parse(gen.out);
    j["edges"][0]["label"] = j["edges"][0]["label"].get<int>() == 1 ? 2 : 1;
    write(dir.file("tampered.json"), dump(j));
    const Outcome bad = run_cli({"verify", dir.file("tampered.json")});
    EXPECT_EQ(bad.code, cli::kInvalidCertificate);
    EXPECT_NE(bad.err.find("edge c0-c1"), std::string::npos) << bad.err;

    write(dir.file("junk.json"), "{not json");
    EXPECT_EQ(run_cli({"verify", dir.file("junk.json")}).code, cli::kInvalidCertificate);
    EXPECT_EQ(run_cli({"verify", dir.file("absent.json")}).code, cli::kInvalidArguments);
}

TEST(Cli, GenerateChoosesKind) {
    const Json sem = Json::parse(run_cli({"generate", "--m", "15", "--n", "1", "--valence", "84"}).out);
    EXPECT_EQ(sem["kind"], "super-edge-magic");
    const Json em = Json::parse(run_cli({"generate", "--m", "15", "--n", "1", "--valence", "100"}).out);
    EXPECT_EQ(em["valence"], 100);
    EXPECT_EQ(run_cli({"generate", "--m", "15", "--n", "1", "--valence", "200"}).code, cli::kInvalidArguments);
    EXPECT_EQ(run_cli({"generate", "--m", "14", "--n", "1", "--valence", "60"}).code, cli::kInvalidArguments);
}

TEST(Cli, CoverRoundTripUpTo35) {
    TempDir dir;
    for (auto [p, q] : {std::pair{3, 5}, {3, 7}, {3, 11}, {5, 7}}) {
        for (int n = 1; n <= 2; ++n) {
            for (const char* mode : {"sem", "em"}) {
                const std::string path = dir.file("cover.json");
                const Outcome o = run_cli({"cover", "--p", std::to_string(p), "--q", std::to_string(q), "--n",
                                           std::to_string(n), "--mode", mode, "--out", path});
                ASSERT_EQ(o.code, cli::kOk);
                EXPECT_EQ(run_cli({"verify", path}).code, cli::kOk);
                std::ifstream in(path);
                const Json report = Json::parse(in);
                for (std::size_t i = 0; i < report["certificates"].size(); ++i) {
                    const std::string single = dir.file("cert.json");
                    write(single, dump(report["certificates"][i]));
                    ASSERT_EQ(run_cli({"verify", single}).code, cli::kOk) << p << q << n << mode << i;
                }
            }
        }
    }
}

TEST(Cli, VerifyReportDetectsForgery) {
    TempDir dir;
    const Outcome o = run_cli({"cover", "--p", "3", "--q", "5", "--n", "1", "--mode", "sem"});
    Json report = Json::parse(o.out);
    report["achieved"].erase(3);
    write(dir.file("forged.json"), dump(report));
    EXPECT_EQ(run_cli({"verify", dir.file("forged.json")}).code, cli::kInvalidCertificate);

    report = Json::parse(o.out);
    report["certificates"][2]["vertices"][0]["label"] = 99;
    write(dir.file("forged2.json"), dump(report));
    EXPECT_EQ(run_cli({"verify", dir.file("forged2.json")}).code, cli::kInvalidCertificate);
}

TEST(Cli, Spectrum) {
    const Outcome o = run_cli({"spectrum", "--family", "crown", "--m", "3", "--n", "1", "--mode", "em"});
    EXPECT_EQ(o.code, cli::kOk);
    const Json j = Json::parse(o.out);
    EXPECT_EQ(j["spectrum"].size(), 10u);
    EXPECT_EQ(j["witnesses"].size(), 10u);
    for (const Json& w : j["witnesses"]) EXPECT_NO_THROW(certificate_from_json(w));
    EXPECT_EQ(run_cli({"spectrum", "--family", "crown", "--m", "7", "--n", "1", "--mode", "sem"}).code,
              cli::kGuardExceeded);
    EXPECT_EQ(run_cli({"spectrum", "--family", "crown", "--m", "3", "--n", "1", "--mode", "sem", "--guard", "10"}).code,
              cli::kGuardExceeded);
}

TEST(Cli, Arithmetic) {
    const Json b = Json::parse(run_cli({"bezout", "--p", "5", "--q", "7"}).out);
    EXPECT_EQ(b["alpha"], 3);
    EXPECT_EQ(b["beta"], -2);
    const Json c = Json::parse(run_cli({"conflicts", "--p", "3", "--k", "2", "--q", "5"}).out);
    EXPECT_EQ(c["values"], Json::array({6, 10, 21, 25, 36, 40}));
    const Json bound = Json::parse(run_cli({"bound", "--m", "15", "--n", "2"}).out);
    EXPECT_EQ(bound["crown_bound"], 9);
    const Json cycle = Json::parse(run_cli({"bound", "--m", "45", "--cycle"}).out);
    EXPECT_EQ(cycle["cycle_bound"], 4);
}

TEST(Cli, ArgumentErrors) {
    EXPECT_EQ(run_cli({}).code, cli::kInvalidArguments);
    EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kInvalidArguments);
    EXPECT_EQ(run_cli({"bezout", "--p", "3", "--q", "3"}).code, cli::kInvalidArguments);
    EXPECT_EQ(run_cli({"cover", "--p", "4", "--q", "5", "--n", "1"}).code, cli::kInvalidArguments);
    EXPECT_EQ(run_cli({"intervals", "--family", "crown", "--m", "2", "--n", "1"}).code, cli::kInvalidArguments);
    EXPECT_EQ(run_cli({"intervals", "--mode", "xyz"}).code, cli::kInvalidArguments);
    EXPECT_EQ(run_cli({"--help"}).code, cli::kOk);
}
