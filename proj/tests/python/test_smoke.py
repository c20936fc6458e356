import json
import math

import pytest

import brex


def write_fixture(tmp_path):
    (tmp_path / "emb.txt").write_text(
        "acquired 1 0 0\nbought 0.96 0.28 0\nmet 0 0 1\n"
    )
    records = [
        (["Adidas", "acquired", "Reebok"], None),
        (["Disney", "bought", "Pixar"], None),
        (["Apple", "met", "Samsung"], None),
    ]
    with open(tmp_path / "corpus.jsonl", "w") as f:
        for tokens, _ in records:
            f.write(json.dumps({
                "tokens": tokens,
                "entities": [
                    {"start": 0, "end": 1, "type": "ORG"},
                    {"start": 2, "end": 3, "type": "ORG"},
                ],
            }) + "\n")
    (tmp_path / "seeds.json").write_text(json.dumps({
        "relation": "acquired",
        "type_pair": ["ORG", "ORG"],
        "positive_pairs": [["Adidas", "Reebok"]],
        "positive_templates": ["[X] acquired [Y]"],
    }))
    (tmp_path / "gold.tsv").write_text("Adidas\tReebok\nDisney\tPixar\n")
    return {k: str(tmp_path / v) for k, v in [
        ("corpus", "corpus.jsonl"), ("embeddings", "emb.txt"),
        ("seeds", "seeds.json"), ("gold", "gold.tsv")]}


def test_confidence():
    assert brex.confidence_from_counts(2, 1, 0, 1, 0) == pytest.approx(2 / 3)
    assert brex.confidence_from_counts(0, 1, 0) == 0.0
    assert brex.combine_confidences([0.5, 0.5]) == 0.75


def test_similarity():
    z = [0.0, 0.0]
    assert brex.template_similarity(z, [1, 0], z, z, [1, 0], z, kind="match") == pytest.approx(0.6)
    assert brex.template_similarity(z, [1, 0], z, z, [1, 0], z, b_types=("ORG", "PER")) == 0.0
    with pytest.raises(brex.UsageError):
        brex.template_similarity(z, [1, 0], z, z, [1, 0], z, kind="cosine")


def test_embeddings(tmp_path):
    files = write_fixture(tmp_path)
    emb = brex.load_embeddings(files["embeddings"])
    assert emb.dimension == 3 and len(emb) == 3
    assert "bought" in emb
    v = emb.context_vector(["acquired", "met"])
    assert math.isclose(sum(x * x for x in v), 1.0)
    with pytest.raises(brex.InputError):
        brex.load_embeddings(str(tmp_path / "missing.txt"))


def test_bootstrap_and_run(tmp_path):
    files = write_fixture(tmp_path)
    r = brex.bootstrap(files["corpus"], files["embeddings"], files["seeds"], mode="brej", tau_sim=0.9)
    pairs = {(a["e1"], a["e2"]) for a in r["accepted"]}
    assert pairs == {("Adidas", "Reebok"), ("Disney", "Pixar")}
    assert len(r["iterations"]) == 3

    rc, log = brex.run(files["corpus"], files["embeddings"], files["seeds"],
                       str(tmp_path / "out"), gold=files["gold"])
    assert rc == 0, log
    report = json.loads((tmp_path / "out" / "report.json").read_text())
    assert report["precision"] == 1.0

    rc, out, err = brex.main(["eval", "--run", str(tmp_path / "out"), "--gold", files["gold"]])
    assert rc == 0 and "acquired" in out
    with pytest.raises(brex.UsageError):
        brex.bootstrap(files["corpus"], files["embeddings"], files["seeds"], tau_sim=2.0)
