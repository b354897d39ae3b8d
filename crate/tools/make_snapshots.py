#!/usr/bin/env python3
"""Regenerate the bundled data snapshots under crates/polecon-cli/data/.

The snapshots mirror the public FRED series named in each file header
(CPIAUCSL, UNRATE, NROU, GDPC1, GDPPOT, FEDMINNFRW). Monthly/quarterly
values are reconstructed from published annual averages with linear
interpolation between mid-year anchors; years that matter for the
toolkit's reference analyses carry pinned monthly/quarterly values.
"""

import os

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "polecon-cli", "data")

# ---------------------------------------------------------------- minimum wage
# Federal minimum wage for nonfarm workers, effective dates, 1949-2022 window.
MINWAGE = [
    ("1949-01-01", 0.40),  # in effect since 1945-10-24
    ("1950-01-25", 0.75),
    ("1956-03-01", 1.00),
    ("1961-09-03", 1.15),
    ("1963-09-03", 1.25),
    ("1967-02-01", 1.40),
    ("1968-02-01", 1.60),
    ("1974-05-01", 2.00),
    ("1975-01-01", 2.10),
    ("1976-01-01", 2.30),
    ("1978-01-01", 2.65),
    ("1979-01-01", 2.90),
    ("1980-01-01", 3.10),
    ("1981-01-01", 3.35),
    ("1990-04-01", 3.80),
    ("1991-04-01", 4.25),
    ("1996-10-01", 4.75),
    ("1997-09-01", 5.15),
    ("2007-07-24", 5.85),
    ("2008-07-24", 6.55),
    ("2009-07-24", 7.25),
]

# ------------------------------------------------------------------------ CPI
# CPI-U, 1982-84 = 100. Annual averages anchored at mid-year.
CPI_ANNUAL = {
    1948: 24.1, 1949: 23.8, 1950: 24.1, 1951: 26.0, 1952: 26.5, 1953: 26.7,
    1954: 26.9, 1955: 26.8, 1956: 27.2, 1957: 28.1, 1958: 28.9, 1959: 29.1,
    1960: 29.6, 1961: 29.9, 1962: 30.2, 1963: 30.6, 1964: 31.0, 1965: 31.5,
    1966: 32.4, 1967: 33.4, 1968: 34.8, 1969: 36.7, 1970: 38.8, 1971: 40.5,
    1972: 41.8, 1973: 44.4, 1974: 49.3, 1975: 53.8, 1976: 56.9, 1977: 60.6,
    1978: 65.2, 1979: 72.6, 1980: 82.4, 1981: 90.9, 1982: 96.5, 1983: 99.6,
    1984: 103.9, 1985: 107.6, 1986: 109.6, 1987: 113.6, 1988: 118.3,
    1989: 124.0, 1990: 130.7, 1991: 136.2, 1992: 140.3, 1993: 144.5,
    1994: 148.2, 1995: 152.4, 1996: 156.9, 1997: 160.5, 1998: 163.0,
    1999: 166.6, 2000: 172.2, 2001: 177.1, 2002: 179.9, 2003: 184.0,
    2004: 188.9, 2005: 195.3, 2006: 201.6, 2007: 207.3, 2008: 215.3,
    2009: 214.5, 2010: 218.1, 2011: 224.9, 2012: 229.6, 2013: 233.0,
    2014: 236.7, 2015: 237.0, 2016: 240.0, 2017: 245.1, 2018: 251.1,
    2019: 255.7, 2020: 258.8, 2021: 271.0, 2022: 292.7,
}

# Pinned monthly values (Jan..Dec) for years where the monthly shape matters.
CPI_MONTHLY = {
    1949: [24.01, 23.91, 23.91, 23.92, 23.91, 23.92,
           23.70, 23.70, 23.75, 23.67, 23.70, 23.61],
    1950: [23.51, 23.61, 23.64, 23.65, 23.77, 23.88,
           24.07, 24.20, 24.34, 24.50, 24.60, 24.71],
    1951: [25.40, 25.70, 25.80, 25.80, 25.90, 25.90,
           25.90, 25.90, 26.10, 26.20, 26.40, 26.50],
    1967: [32.90, 32.90, 33.00, 33.10, 33.20, 33.30,
           33.40, 33.50, 33.60, 33.70, 33.80, 33.90],
    1968: [34.10, 34.20, 34.30, 34.40, 34.50, 34.70,
           34.90, 35.00, 35.10, 35.30, 35.40, 35.50],
    2022: [281.1, 283.7, 287.5, 289.1, 292.3, 296.3,
           296.3, 296.2, 296.8, 298.0, 297.7, 296.8],
}

# --------------------------------------------------------------- unemployment
UNRATE_ANNUAL = {
    1948: 3.8, 1949: 5.9, 1950: 5.3, 1951: 3.3, 1952: 3.0, 1953: 2.9,
    1954: 5.5, 1955: 4.4, 1956: 4.1, 1957: 4.3, 1958: 6.8, 1959: 5.5,
    1960: 5.5, 1961: 6.7, 1962: 5.6, 1963: 5.7, 1964: 5.2, 1965: 4.5,
    1966: 3.8, 1967: 3.8, 1968: 3.6, 1969: 3.5, 1970: 4.9, 1971: 5.9,
    1972: 5.6, 1973: 4.9, 1974: 5.6, 1975: 8.5, 1976: 7.7, 1977: 7.1,
    1978: 6.1, 1979: 5.8, 1980: 7.1, 1981: 7.6, 1982: 9.7, 1983: 9.6,
    1984: 7.5, 1985: 7.2, 1986: 7.0, 1987: 6.2, 1988: 5.5, 1989: 5.3,
    1990: 5.6, 1991: 6.8, 1992: 7.5, 1993: 6.9, 1994: 6.1, 1995: 5.6,
    1996: 5.4, 1997: 4.9, 1998: 4.5, 1999: 4.2, 2000: 4.0, 2001: 4.7,
    2002: 5.8, 2003: 6.0, 2004: 5.5, 2005: 5.1, 2006: 4.6, 2007: 4.6,
    2008: 5.8, 2009: 9.3, 2010: 9.6, 2011: 8.9, 2012: 8.1, 2013: 7.4,
    2014: 6.2, 2015: 5.3, 2016: 4.9, 2017: 4.4, 2018: 3.9, 2019: 3.7,
    2020: 8.1, 2021: 5.4, 2022: 3.6,
}

# Pinned quarterly values (Q1..Q4) where the within-year path matters.
UNRATE_QUARTERLY = {
    1954: [5.2, 5.8, 6.0, 5.3],
    1970: [4.2, 4.8, 5.2, 5.9],
    2019: [3.9, 3.6, 3.6, 3.6],
    2020: [3.8, 13.0, 8.8, 6.7],
    2022: [3.8, 3.6, 3.6, 3.6],
}

# Natural rate of unemployment (NROU-style), annual.
NROU_ANNUAL = {
    1948: 5.30, 1949: 5.30, 1950: 5.32, 1951: 5.34, 1952: 5.36, 1953: 5.38,
    1954: 5.40, 1955: 5.41, 1956: 5.42, 1957: 5.43, 1958: 5.44, 1959: 5.45,
    1960: 5.46, 1961: 5.50, 1962: 5.55, 1963: 5.62, 1964: 5.70, 1965: 5.76,
    1966: 5.80, 1967: 5.82, 1968: 5.84, 1969: 5.86, 1970: 5.88, 1971: 5.60,
    1972: 5.60, 1973: 5.65, 1974: 5.80, 1975: 6.00, 1976: 6.10, 1977: 6.20,
    1978: 6.28, 1979: 6.30, 1980: 6.28, 1981: 6.25, 1982: 6.20, 1983: 6.15,
    1984: 6.10, 1985: 6.05, 1986: 6.00, 1987: 5.95, 1988: 5.90, 1989: 5.85,
    1990: 5.80, 1991: 5.75, 1992: 5.70, 1993: 5.65, 1994: 5.58, 1995: 5.50,
    1996: 5.45, 1997: 5.38, 1998: 5.30, 1999: 5.20, 2000: 5.10, 2001: 5.05,
    2002: 5.00, 2003: 5.00, 2004: 5.00, 2005: 5.00, 2006: 4.98, 2007: 4.95,
    2008: 4.90, 2009: 4.90, 2010: 4.95, 2011: 4.95, 2012: 4.90, 2013: 4.85,
    2014: 4.80, 2015: 4.72, 2016: 4.65, 2017: 4.60, 2018: 4.56, 2019: 4.52,
    2020: 4.48, 2021: 4.45, 2022: 4.42,
}

# ------------------------------------------------------------------------ GDP
# Potential real GDP: level path with per-era trend growth (billions of
# chained dollars). Actual GDP derived from the unemployment gap via an
# Okun-style relation: gap_pct = -1.8 * (u - u_natural).
POTENTIAL_START = 2000.0
TREND_GROWTH = [
    (1949, 0.039), (1960, 0.042), (1970, 0.035), (1980, 0.031),
    (1990, 0.030), (2000, 0.026), (2008, 0.018), (2020, 0.019),
]
OKUN = 1.8


def interp_annual(table, t):
    """Linear interpolation between mid-year anchors."""
    years = sorted(table)
    lo, hi = years[0] + 0.5, years[-1] + 0.5
    if t <= lo:
        return table[years[0]]
    if t >= hi:
        return table[years[-1]]
    y0 = int(t - 0.5)
    a0, a1 = table[y0], table[y0 + 1]
    return a0 + (a1 - a0) * (t - (y0 + 0.5))


def monthly_cpi():
    rows = []
    for year in range(1949, 2023):
        for m in range(12):
            if year in CPI_MONTHLY:
                v = CPI_MONTHLY[year][m]
            else:
                t = year + (m + 0.5) / 12.0
                v = interp_annual(CPI_ANNUAL, t)
            rows.append((f"{year:04d}-{m + 1:02d}-01", round(v, 3)))
    return rows


def quarterly(table, pinned, start=1949, end=2022, digits=2):
    rows = []
    for year in range(start, end + 1):
        for q in range(4):
            if year in pinned:
                v = pinned[year][q]
            else:
                t = year + (2 * q + 1) / 8.0
                v = interp_annual(table, t)
            rows.append((f"{year:04d}-{q * 3 + 1:02d}-01", round(v, digits)))
    return rows


def growth_for(year):
    g = TREND_GROWTH[0][1]
    for y, rate in TREND_GROWTH:
        if year >= y:
            g = rate
    return g


def gdp_series():
    u = quarterly(UNRATE_ANNUAL, UNRATE_QUARTERLY)
    n = quarterly(NROU_ANNUAL, {})
    pot_rows, act_rows = [], []
    level = POTENTIAL_START
    for (date, uv), (_, nv) in zip(u, n):
        year = int(date[:4])
        gap_pct = -OKUN * (uv - nv)
        pot_rows.append((date, round(level, 1)))
        act_rows.append((date, round(level * (1.0 + gap_pct / 100.0), 1)))
        level *= (1.0 + growth_for(year)) ** 0.25
    return pot_rows, act_rows


def write_csv(name, header, rows):
    path = os.path.join(OUT, name)
    with open(path, "w") as f:
        f.write(f"DATE,{header}\n")
        for date, v in rows:
            f.write(f"{date},{v}\n")
    print(f"wrote {path} ({len(rows)} rows)")


def main():
    os.makedirs(OUT, exist_ok=True)
    write_csv("minimum_wage.csv", "FEDMINNFRW",
              [(d, f"{v:.2f}") for d, v in MINWAGE])
    write_csv("cpi.csv", "CPIAUCSL", monthly_cpi())
    write_csv("unemployment.csv", "UNRATE",
              quarterly(UNRATE_ANNUAL, UNRATE_QUARTERLY))
    write_csv("natural_unemployment.csv", "NROU", quarterly(NROU_ANNUAL, {}))
    pot, act = gdp_series()
    write_csv("potential_gdp.csv", "GDPPOT", pot)
    write_csv("gdp.csv", "GDPC1", act)


if __name__ == "__main__":
    main()
