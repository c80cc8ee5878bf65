import json

from supercoh.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCohomologyVerb:
    def test_point(self, capsys, tmp_path):
        p = tmp_path / "point.json"
        p.write_text(json.dumps({"vertex_count": 1, "maximal_simplices": [[0]]}))
        code, out, _ = run(capsys, "cohomology", "--complex", str(p), "--deg", "0", "--mod", "0")
        assert code == 0
        assert out.strip() == "Z"

    def test_builtin_name(self, capsys):
        code, out, _ = run(capsys, "cohomology", "--complex", "@rp2", "--deg", "2", "--mod", "0")
        assert code == 0 and out.strip() == "Z/2"

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "cohomology", "--complex", "@rp2", "--deg", "1", "--mod", "2", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["group"]["invariant_factors"] == [2]
        assert len(data["generators"]) == 1

    def test_malformed_json_is_parse_error(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("{nope")
        code, _, err = run(capsys, "cohomology", "--complex", str(p), "--deg", "0")
        assert code == 2
        assert "error" in err


class TestBrauerVerbs:
    def test_group_report(self, capsys, tmp_path):
        p = tmp_path / "rp2.json"
        from supercoh import corpus

        p.write_text(json.dumps(corpus.complex_by_name("rp2").to_json_dict()))
        code, out, _ = run(capsys, "brauer", "--complex", str(p), "--variant", "ko", "--op", "group")
        assert code == 0
        assert out.strip() == "Z/8 ⊕ Z/4"

    def test_twist_shortcut(self, capsys):
        code, out, _ = run(capsys, "twist", "--complex", "@rp2", "--variant", "ko")
        assert code == 0 and out.strip() == "Z/4"

    def test_order(self, capsys, tmp_path):
        from supercoh import corpus
        from supercoh.simplicial import cohomology

        rp2 = corpus.complex_by_name("rp2")
        _, basis = cohomology(rp2, 1, 2)
        el = {
            "variant": "ko",
            "a": [0] * 6,
            "b": list(basis[0].cochain.values),
            "c": [0] * 10,
        }
        p = tmp_path / "el.json"
        p.write_text(json.dumps(el))
        code, out, _ = run(capsys, "order", "--complex", "@rp2", "--variant", "ko", "--element", str(p))
        assert code == 0 and out.strip() == "4"

    def test_equals_and_add(self, capsys, tmp_path):
        ident = {"variant": "ku", "a": [0], "b": [], "c": []}
        p = tmp_path / "e.json"
        p.write_text(json.dumps(ident))
        code, out, _ = run(
            capsys, "brauer", "--complex", "@point", "--variant", "ku",
            "--op", "equals", "--element", str(p), "--other", str(p),
        )
        assert code == 0 and out.strip() == "true"

    def test_missing_element_is_parse_error(self, capsys):
        code, _, err = run(capsys, "order", "--complex", "@rp2", "--variant", "ko")
        assert code == 2


class TestOtherVerbs:
    def test_superline_group(self, capsys):
        code, out, _ = run(capsys, "superline", "--complex", "@s1", "--flavor", "real", "--op", "group")
        assert code == 0 and out.strip() == "Z/2 ⊕ Z/2"

    def test_classify_name(self, capsys):
        code, out, _ = run(capsys, "classify", "--name", "ku")
        assert code == 0 and "nonzero" in out

    def test_classify_enumerate(self, capsys):
        code, out, _ = run(capsys, "classify", "--enumerate", "Z/8;Z/2")
        assert code == 0 and out.strip().startswith("2 ")

    def test_dsv(self, capsys, tmp_path):
        p = tmp_path / "v.json"
        p.write_text(json.dumps({"field": "Q", "dim0": 1, "dim1": 1, "d0": [[1]], "d1": [[0]]}))
        code, out, _ = run(capsys, "dsv", "--input", str(p))
        assert code == 0
        assert "homology (0|0)" in out

    def test_unknown_verb_exits_2(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_unknown_corpus_name(self, capsys):
        code, _, err = run(capsys, "cohomology", "--complex", "@nope", "--deg", "0")
        assert code == 2


class TestDeterminism:
    def test_byte_identical_reports(self, capsys):
        _, out1, _ = run(capsys, "brauer", "--complex", "@klein", "--variant", "ko", "--op", "group", "--json")
        _, out2, _ = run(capsys, "brauer", "--complex", "@klein", "--variant", "ko", "--op", "group", "--json")
        assert out1 == out2

    def test_corpus_roundtrip(self, tmp_path, capsys):
        from supercoh import corpus
        from supercoh.simplicial import SimplicialComplex

        for name in corpus.CORPUS_NAMES:
            x = corpus.complex_by_name(name)
            p = tmp_path / f"{name}.json"
            p.write_text(json.dumps(x.to_json_dict()))
            again = SimplicialComplex.from_json_dict(json.loads(p.read_text()))
            assert again == x


class TestVerifyVerb:
    def test_single_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "superline")
        assert code == 0
        assert "PASS" in out and "FAIL" not in out

    def test_unknown_suite(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "nonsense")
        assert code == 2
