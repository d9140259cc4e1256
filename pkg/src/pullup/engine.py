"""Fixpoint driver: applies the rules until nothing changes, then optionally
runs the multiple-inheritance pass, and reports what happened.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from .errors import IterationLimitExceeded
from .metrics import MetricsSnapshot, snapshot
from .model import ClassModel
from .rules import (
    RuleApplication,
    apply_shared_superclass_rule,
    exploit_multiple_inheritance,
)

log = logging.getLogger(__name__)


@dataclass
class EngineOptions:
    multi_inheritance: bool = False
    min_subclasses: int = 2
    max_iterations: Optional[int] = None
    trace: bool = False


@dataclass
class RestructureReport:
    applications: list[RuleApplication] = field(default_factory=list)
    iterations: int = 0
    created_entities: frozenset[int] = frozenset()
    metrics_before: Optional[MetricsSnapshot] = None
    metrics_after: Optional[MetricsSnapshot] = None

    @property
    def new_class_count(self) -> int:
        return len(self.created_entities)


def _record(
    model: ClassModel,
    options: EngineOptions,
    applications: Optional[list[RuleApplication]],
    app: Optional[RuleApplication],
    decls_before: int,
) -> bool:
    if app is None:
        return False
    if options.min_subclasses >= 2:
        # Termination potential: every firing must remove declarations.
        assert model.declared_property_count < decls_before, (
            f"rule application did not decrease declarations: {app}"
        )
    if options.trace:
        log.info(
            "%s keys=%s sources=%s target=%s",
            app.rule.value,
            [k.prop_name for k in app.keys],
            sorted(model.entity(s).name for s in app.sources),
            model.entity(app.target).name,
        )
    if applications is not None:
        applications.append(app)
    return True


def pass_rules_1_2(
    model: ClassModel,
    options: EngineOptions,
    applications: Optional[list[RuleApplication]] = None,
) -> bool:
    """One sweep of rules 1 and 2 over a snapshot of the entity list.

    Entities created mid-pass are not visited until the next pass.
    """
    applied = False
    for eid in model.entity_ids():
        subs = model.direct_subclasses(eid)
        if not subs:
            continue
        decls = model.declared_property_count
        app = apply_shared_superclass_rule(model, eid, subs, options.min_subclasses)
        applied |= _record(model, options, applications, app, decls)
    return applied


def pass_rule_3(
    model: ClassModel,
    options: EngineOptions,
    applications: Optional[list[RuleApplication]] = None,
) -> bool:
    """One rule-3 attempt over the current top-level classes."""
    tops = {eid for eid in model.entity_ids() if model.is_top_level(eid)}
    decls = model.declared_property_count
    app = apply_shared_superclass_rule(model, None, tops, options.min_subclasses)
    return _record(model, options, applications, app, decls)


def restructure(
    model: ClassModel, options: Optional[EngineOptions] = None
) -> RestructureReport:
    """Run the core fixpoint (and the extension, when enabled) on ``model``.

    The model is transformed in place; the returned report carries the
    applied rules, the outer-pass count, the synthesized entities, and
    metrics snapshots from before and after.
    """
    options = options or EngineOptions()
    before = snapshot(model)
    applications: list[RuleApplication] = []
    iterations = 0
    while True:
        r12 = pass_rules_1_2(model, options, applications)
        r3 = pass_rule_3(model, options, applications)
        iterations += 1
        if not (r12 or r3):
            break
        if options.max_iterations is not None and iterations >= options.max_iterations:
            report = _finish(model, before, applications, iterations)
            raise IterationLimitExceeded(
                f"no fixpoint after {iterations} iterations", report=report
            )
    if options.multi_inheritance:
        last = [model.declared_property_count]

        def on_apply(app: RuleApplication) -> None:
            _record(model, options, applications, app, last[0])
            last[0] = model.declared_property_count

        exploit_multiple_inheritance(model, on_apply=on_apply)
    return _finish(model, before, applications, iterations)


def _finish(
    model: ClassModel,
    before: MetricsSnapshot,
    applications: list[RuleApplication],
    iterations: int,
) -> RestructureReport:
    return RestructureReport(
        applications=applications,
        iterations=iterations,
        created_entities=frozenset(
            a.created for a in applications if a.created is not None
        ),
        metrics_before=before,
        metrics_after=snapshot(model),
    )
