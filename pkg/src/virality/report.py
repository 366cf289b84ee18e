"""Report data model and its TSV / JSON serializations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from virality.glm import GlmFit

TABLE_LABELS = {
    "hashtag": "t(Hashtag)",
    "mention": "t(Mention)",
    "url": "t(URL)",
    "negative": "t(Negative)",
    "negative_newsness": "t(Negative×newsness)",
}
AROUSAL_HEADING = "Only tweets with Arousal > 0"


@dataclass
class CovariateResult:
    name: str
    beta: float | None = None
    std_err: float | None = None
    wald: float | None = None
    lr_statistic: float | None = None
    lr_p_value: float | None = None
    sub_log_lik: float | None = None
    reason: str | None = None  # why a cell is blank


@dataclass
class Block:
    name: str
    n: int
    rate_of_news: float
    retweets: int
    feature_totals: dict
    covariates: list = field(default_factory=list)
    fit: GlmFit | None = None

    @property
    def converged(self) -> bool:
        return self.fit is not None and self.fit.converged

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "rate_of_news": self.rate_of_news,
            "retweets": self.retweets,
            "feature_totals": dict(self.feature_totals),
            "covariates": [vars(c).copy() for c in self.covariates],
            "fit": None if self.fit is None else self.fit.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Block":
        return cls(
            name=d["name"],
            n=d["n"],
            rate_of_news=d["rate_of_news"],
            retweets=d["retweets"],
            feature_totals=dict(d["feature_totals"]),
            covariates=[CovariateResult(**c) for c in d["covariates"]],
            fit=None if d["fit"] is None else GlmFit.from_dict(d["fit"]),
        )


@dataclass
class Report:
    corpus: str
    stages: list
    blocks: list
    news_model: dict
    config: dict

    @property
    def converged(self) -> bool:
        return all(b.converged for b in self.blocks)

    def block(self, name: str) -> Block:
        for b in self.blocks:
            if b.name == name:
                return b
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "corpus": self.corpus,
            "stages": [[name, n] for name, n in self.stages],
            "blocks": [b.to_dict() for b in self.blocks],
            "news_model": dict(self.news_model),
            "config": dict(self.config),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(
            corpus=d["corpus"],
            stages=[(name, n) for name, n in d["stages"]],
            blocks=[Block.from_dict(b) for b in d["blocks"]],
            news_model=dict(d["news_model"]),
            config=dict(d["config"]),
        )

    def __eq__(self, other):
        if not isinstance(other, Report):
            return NotImplemented
        return json.dumps(self.to_dict(), sort_keys=True) == json.dumps(other.to_dict(), sort_keys=True)


def _cell(value, fmt="{:.3f}"):
    return "" if value is None else fmt.format(value)


def to_tsv(report: Report) -> str:
    """Table-1 style layout: a label column and one value column.

    Rows are N, Rate of News and one t value per covariate; an arousal
    block follows under its own heading. Blank cells mark statistics that
    could not be computed (see the structured output for the reason).
    """
    lines = [f"quantity\t{report.corpus}"]
    covariates = report.config.get("covariates", list(TABLE_LABELS))
    if not covariates:
        return lines[0] + "\n"
    for block in report.blocks:
        if block.name != "all":
            lines.append(f"{AROUSAL_HEADING}\t")
        lines.append(f"N\t{block.n}")
        if block.name == "all":
            lines.append(f"Rate of News\t{block.rate_of_news:.3f}")
        for result in block.covariates:
            label = TABLE_LABELS.get(result.name, f"t({result.name})")
            lines.append(f"{label}\t{_cell(result.wald)}")
    return "\n".join(lines) + "\n"


def to_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def from_json(text: str) -> Report:
    return Report.from_dict(json.loads(text))


def emit_report(report: Report, fmt: str = "tsv") -> str:
    if fmt == "tsv":
        return to_tsv(report)
    if fmt in ("json", "structured"):
        return to_json(report)
    raise ValueError(f"unknown report format {fmt!r}")
