"""
Report Styling

Typography, colour schemes and table styling for the PDF classification
report.
"""

from enum import Enum
from typing import Dict, List

from reportlab.lib import colors
from reportlab.lib.enums import TA_CENTER, TA_RIGHT
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import inch
from reportlab.platypus import TableStyle


class ColorScheme(Enum):
    """Available color schemes for PDF generation."""
    DEFAULT = "default"
    BLUE = "blue"
    GREEN = "green"
    PURPLE = "purple"
    ORANGE = "orange"
    DARK = "dark"


def _palette(primary: str, secondary: str, accent: str, background: str, border: str,
             ok: str = '#059669', mismatch: str = '#DC2626', muted: str = '#6B7280') -> Dict[str, colors.Color]:
    return {
        'primary': colors.HexColor(primary),
        'secondary': colors.HexColor(secondary),
        'accent': colors.HexColor(accent),
        'background': colors.HexColor(background),
        'border': colors.HexColor(border),
        'ok': colors.HexColor(ok),
        'mismatch': colors.HexColor(mismatch),
        'muted': colors.HexColor(muted),
    }


class ReportStyleConfig:
    """Configuration class for report styling and layout."""

    # Page layout
    MARGIN_TOP = 1 * inch
    MARGIN_BOTTOM = 1 * inch
    MARGIN_LEFT = 0.75 * inch
    MARGIN_RIGHT = 0.75 * inch

    # Typography
    FONT_FAMILY_NORMAL = 'Helvetica'
    FONT_FAMILY_BOLD = 'Helvetica-Bold'
    FONT_FAMILY_MONO = 'Courier'

    FONT_SIZE_TITLE = 22
    FONT_SIZE_HEADING = 16
    FONT_SIZE_SUBHEADING = 13
    FONT_SIZE_NORMAL = 10
    FONT_SIZE_SMALL = 8
    FONT_SIZE_MONO = 8

    SPACE_AFTER_TITLE = 18
    SPACE_BEFORE_HEADING = 14
    SPACE_AFTER_HEADING = 6
    SPACE_AFTER_PARAGRAPH = 4

    # Orbit tables list at most this many members per orbit
    MAX_MEMBERS_LISTED = 12

    COLOR_SCHEMES = {
        ColorScheme.DEFAULT: _palette('#2C3E50', '#34495E', '#3498DB', '#F8F9FA', '#DEE2E6',
                                      ok='#27AE60', mismatch='#E74C3C', muted='#95A5A6'),
        ColorScheme.BLUE: _palette('#1E3A8A', '#3B82F6', '#60A5FA', '#EFF6FF', '#DBEAFE'),
        ColorScheme.GREEN: _palette('#14532D', '#16A34A', '#4ADE80', '#F0FDF4', '#DCFCE7'),
        ColorScheme.PURPLE: _palette('#581C87', '#9333EA', '#C084FC', '#FAF5FF', '#E9D5FF'),
        ColorScheme.ORANGE: _palette('#9A3412', '#EA580C', '#FB923C', '#FFF7ED', '#FED7AA'),
        # Dark text colours are light; table backgrounds stay dark.
        ColorScheme.DARK: _palette('#F8FAFC', '#E2E8F0', '#64748B', '#1E293B', '#334155',
                                   ok='#10B981', mismatch='#F59E0B'),
    }


class ReportStyleManager:
    """Provides paragraph and table styles for one colour scheme."""

    def __init__(self, color_scheme: ColorScheme = ColorScheme.DEFAULT):
        self.color_scheme = color_scheme
        self.colors = ReportStyleConfig.COLOR_SCHEMES[color_scheme]
        self.styles = self._create_styles()

    def _paragraph(self, name: str, parent: ParagraphStyle, **overrides) -> ParagraphStyle:
        settings = {
            'fontSize': ReportStyleConfig.FONT_SIZE_NORMAL,
            'fontName': ReportStyleConfig.FONT_FAMILY_NORMAL,
            'textColor': self.colors['primary'],
            'spaceAfter': ReportStyleConfig.SPACE_AFTER_PARAGRAPH,
        }
        settings.update(overrides)
        return ParagraphStyle(name, parent=parent, **settings)

    def _create_styles(self) -> Dict[str, ParagraphStyle]:
        base = getSampleStyleSheet()
        return {
            'title': self._paragraph(
                'ReportTitle', base['Title'],
                fontSize=ReportStyleConfig.FONT_SIZE_TITLE,
                fontName=ReportStyleConfig.FONT_FAMILY_BOLD,
                spaceAfter=ReportStyleConfig.SPACE_AFTER_TITLE,
                alignment=TA_CENTER,
            ),
            'heading': self._paragraph(
                'ReportHeading', base['Heading1'],
                fontSize=ReportStyleConfig.FONT_SIZE_HEADING,
                fontName=ReportStyleConfig.FONT_FAMILY_BOLD,
                spaceBefore=ReportStyleConfig.SPACE_BEFORE_HEADING,
                spaceAfter=ReportStyleConfig.SPACE_AFTER_HEADING,
            ),
            'subheading': self._paragraph(
                'ReportSubheading', base['Heading2'],
                fontSize=ReportStyleConfig.FONT_SIZE_SUBHEADING,
                fontName=ReportStyleConfig.FONT_FAMILY_BOLD,
                textColor=self.colors['secondary'],
            ),
            'normal': self._paragraph('ReportNormal', base['Normal']),
            'formula': self._paragraph(
                'ReportFormula', base['Normal'],
                fontSize=ReportStyleConfig.FONT_SIZE_MONO,
                fontName=ReportStyleConfig.FONT_FAMILY_MONO,
                spaceAfter=1,
            ),
            'table_header': self._paragraph(
                'ReportTableHeader', base['Normal'],
                fontName=ReportStyleConfig.FONT_FAMILY_BOLD,
                spaceAfter=1,
            ),
            'ok': self._paragraph(
                'ReportOk', base['Normal'],
                fontName=ReportStyleConfig.FONT_FAMILY_BOLD,
                textColor=self.colors['ok'],
            ),
            'mismatch': self._paragraph(
                'ReportMismatch', base['Normal'],
                fontName=ReportStyleConfig.FONT_FAMILY_BOLD,
                textColor=self.colors['mismatch'],
            ),
            'metadata': self._paragraph(
                'ReportMetadata', base['Normal'],
                fontSize=ReportStyleConfig.FONT_SIZE_SMALL,
                textColor=self.colors['muted'],
                alignment=TA_RIGHT,
            ),
        }

    def get_style(self, style_name: str) -> ParagraphStyle:
        """Get a specific style by name."""
        return self.styles.get(style_name, self.styles['normal'])

    def get_color(self, color_name: str) -> colors.Color:
        """Get a specific color by name."""
        return self.colors.get(color_name, self.colors['primary'])

    def table_style(self) -> TableStyle:
        """Grid table with a shaded header row."""
        commands: List[tuple] = [
            ('GRID', (0, 0), (-1, -1), 0.5, self.colors['border']),
            ('BACKGROUND', (0, 0), (-1, 0), self.colors['background']),
            ('VALIGN', (0, 0), (-1, -1), 'TOP'),
            ('LEFTPADDING', (0, 0), (-1, -1), 5),
            ('RIGHTPADDING', (0, 0), (-1, -1), 5),
            ('TOPPADDING', (0, 0), (-1, -1), 3),
            ('BOTTOMPADDING', (0, 0), (-1, -1), 3),
        ]
        return TableStyle(commands)


def get_available_color_schemes() -> List[str]:
    """Return list of available color scheme names."""
    return [scheme.value for scheme in ColorScheme]
