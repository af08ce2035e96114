"""Parsers for the metric / domain / map specification grammar.

Metric specs:
    disk | pdisk | pdiskR:<R> | annulus:<r> | conical:<alpha>
    | halfplane | strip:<h> | pull:<map>:<metric>
Map specs:
    phi | example1 | square | mobius:<a_re>,<a_im>
Domain specs (for distance / oracle commands):
    disk | pdisk | pdiskR:<R> | annulus:<r> | halfplane | strip:<h>
"""
from __future__ import annotations

from .domains import DomainModel
from .errors import BadParameter, ParseError
from .maps import HolomorphicMap, builtin_map
from .metrics import (MetricDensity, annulus_metric, conical_metric,
                      disk_metric, half_plane_metric, pullback,
                      punctured_disk_metric, punctured_disk_metric_r,
                      strip_metric)


def _float(text: str, what: str) -> float:
    try:
        return float(text)
    except ValueError as exc:
        raise ParseError(f"bad {what}: {text!r}") from exc


def parse_map(spec: str) -> tuple[HolomorphicMap, DomainModel, str]:
    """Parse a map spec; returns (map, source domain, remainder).

    The remainder is whatever follows the map inside a pull spec (the
    mobius form consumes an extra ':'-separated parameter segment).
    """
    head, _, rest = spec.partition(":")
    try:
        if head == "mobius":
            params, _, rest = rest.partition(":")
            re_s, _, im_s = params.partition(",")
            a = complex(_float(re_s, "mobius parameter"), _float(im_s, "mobius parameter"))
            m, dom = builtin_map("mobius", a)
        elif head in ("phi", "example1", "square", "identity"):
            m, dom = builtin_map(head)
        else:
            raise ParseError(f"unknown map {head!r}")
    except BadParameter as exc:
        raise ParseError(str(exc)) from exc
    return m, dom, rest


def parse_metric(spec: str) -> MetricDensity:
    """Parse a metric spec string into a MetricDensity."""
    try:
        if spec == "disk":
            return disk_metric()
        if spec == "pdisk":
            return punctured_disk_metric()
        if spec == "halfplane":
            return half_plane_metric()
        head, _, rest = spec.partition(":")
        if head == "pdiskR":
            return punctured_disk_metric_r(_float(rest, "radius"))
        if head == "annulus":
            return annulus_metric(_float(rest, "inner radius"))
        if head == "conical":
            return conical_metric(_float(rest, "conical order"))
        if head == "strip":
            return strip_metric(_float(rest, "strip height"))
        if head == "pull":
            m, source, remainder = parse_map(rest)
            if not remainder:
                raise ParseError(f"pull spec {spec!r} is missing a target metric")
            return pullback(parse_metric(remainder), m, source)
    except BadParameter as exc:
        raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown metric spec {spec!r}")


def parse_domain(spec: str) -> DomainModel:
    """Parse a domain spec string into a DomainModel."""
    try:
        if spec == "disk":
            return DomainModel.disk()
        if spec == "pdisk":
            return DomainModel.punctured_disk()
        if spec == "halfplane":
            return DomainModel.half_plane()
        head, _, rest = spec.partition(":")
        if head == "pdiskR":
            return DomainModel.punctured_disk_r(_float(rest, "radius"))
        if head == "annulus":
            return DomainModel.annulus(_float(rest, "inner radius"))
        if head == "strip":
            return DomainModel.strip(_float(rest, "strip height"))
    except BadParameter as exc:
        raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown domain spec {spec!r}")
