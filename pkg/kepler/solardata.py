"""kepler.solardata - eccentricities of the planets of the Solar System"""

import pandas as pd

from dataclasses import dataclass
from .analytic import SpeedProfile

@dataclass(frozen=True)
class PlanetRecord:
    """PlanetRecord: a planet and the eccentricity of its orbit"""
    name: str  # name of the planet
    eps: float # orbital eccentricity [-]

# (name, eccentricity) as tabulated, Mercury outward
_TABLE = (
    ('Mercury', '0.20563069'),
    ('Venus',   '0.00677323'),
    ('Earth',   '0.01671022'),
    ('Mars',    '0.09341233'),
    ('Jupiter', '0.04839266'),
    ('Saturn',  '0.05415060'),
    ('Uranus',  '0.04716771'),
    ('Neptune', '0.00858587'),
)

def load_planets() -> list[PlanetRecord]:
    """load_planets() -> the eight planets from Mercury to Neptune"""
    return [PlanetRecord(name = name, eps = float(eps)) for name, eps in _TABLE]

def planet_speed_ratio(rec: PlanetRecord) -> float:
    """planet_speed_ratio(rec) -> (1 + eps)/(1 - eps), the ratio of the speed at
perihelion to the speed at aphelion"""
    return (1 + rec.eps) / (1 - rec.eps)

def planet_speed_profile(rec: PlanetRecord) -> SpeedProfile:
    """planet_speed_profile(rec) -> unit-scale (C/p = 1) SpeedProfile of the
planet's orbit"""
    return SpeedProfile(eps = rec.eps, scale = 1.0)

def planets_frame() -> pd.DataFrame:
    """planets_frame() -> pandas.DataFrame with columns name, eccentricity and
speed_ratio, one row per planet"""
    planets = load_planets()
    return pd.DataFrame({
        'name': [p.name for p in planets],
        'eccentricity': [p.eps for p in planets],
        'speed_ratio': [planet_speed_ratio(p) for p in planets],
    })
