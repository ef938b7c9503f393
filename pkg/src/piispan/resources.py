"""Locale gazetteers shared by the detector and the synthetic value fakers."""

from __future__ import annotations

LOCALES = ("en", "fr", "es", "de", "it", "pt", "nl")

FIRST_NAMES: dict[str, tuple[str, ...]] = {
    "en": ("James", "Emily", "Oliver", "Sarah", "Michael", "Hannah", "Daniel", "Grace", "Thomas", "Olivia", "Henry", "Chloe"),
    "fr": ("Camille", "Julien", "Élodie", "Mathieu", "Sophie", "Antoine", "Léa", "Nicolas", "Claire", "Hugo", "Manon", "Théo"),
    "es": ("Lucía", "Javier", "Carmen", "Alejandro", "Sofía", "Pablo", "Marta", "Diego", "Elena", "Sergio", "Paula", "Álvaro"),
    "de": ("Lukas", "Anna", "Jonas", "Lena", "Felix", "Marie", "Maximilian", "Katharina", "Tobias", "Johanna", "Niklas", "Jürgen"),
    "it": ("Giulia", "Marco", "Francesca", "Alessandro", "Chiara", "Matteo", "Martina", "Lorenzo", "Sara", "Davide", "Federica", "Niccolò"),
    "pt": ("João", "Beatriz", "Tiago", "Inês", "Rafael", "Mariana", "Gonçalo", "Carolina", "Rodrigo", "Leonor", "Duarte", "Matilde"),
    "nl": ("Daan", "Sanne", "Bram", "Lotte", "Lars", "Femke", "Thijs", "Anouk", "Ruben", "Maud", "Jesse", "Fleur"),
}

LAST_NAMES: dict[str, tuple[str, ...]] = {
    "en": ("Smith", "Johnson", "Taylor", "Brown", "Walker", "Harris", "Clarke", "Wright", "Mitchell", "Turner", "Parker", "Bennett"),
    "fr": ("Martin", "Bernard", "Dubois", "Lefèvre", "Moreau", "Laurent", "Girard", "Rousseau", "Fournier", "Mercier", "Bonnet", "Lambert"),
    "es": ("García", "Fernández", "López", "Martínez", "Sánchez", "Romero", "Navarro", "Torres", "Domínguez", "Vázquez", "Ruiz", "Moreno"),
    "de": ("Müller", "Schmidt", "Schneider", "Fischer", "Weber", "Becker", "Hoffmann", "Schäfer", "Koch", "Richter", "Wagner", "Krüger"),
    "it": ("Rossi", "Russo", "Ferrari", "Esposito", "Bianchi", "Romano", "Colombo", "Ricci", "Marino", "Greco", "Bruno", "Conti"),
    "pt": ("Silva", "Santos", "Ferreira", "Pereira", "Oliveira", "Costa", "Rodrigues", "Martins", "Sousa", "Fernandes", "Gonçalves", "Almeida"),
    "nl": ("Jansen", "Visser", "Smit", "Meijer", "Bakker", "Mulder", "Bos", "Vos", "Peters", "Hendriks", "Dekker", "Brouwer"),
}

# (city, region, postal-code format): '#' digit, 'A' uppercase letter
CITIES: dict[str, tuple[tuple[str, str, str], ...]] = {
    "en": (
        ("Springfield", "Illinois", "#####"),
        ("Portland", "Oregon", "#####"),
        ("Austin", "Texas", "#####"),
        ("Manchester", "Greater Manchester", "A## #AA"),
        ("Bristol", "South West England", "AA# #AA"),
        ("Denver", "Colorado", "#####"),
    ),
    "fr": (
        ("Lyon", "Auvergne-Rhône-Alpes", "#####"),
        ("Toulouse", "Occitanie", "#####"),
        ("Nantes", "Pays de la Loire", "#####"),
        ("Bordeaux", "Nouvelle-Aquitaine", "#####"),
        ("Strasbourg", "Grand Est", "#####"),
    ),
    "es": (
        ("Sevilla", "Andalucía", "#####"),
        ("Valencia", "Comunidad Valenciana", "#####"),
        ("Zaragoza", "Aragón", "#####"),
        ("Bilbao", "País Vasco", "#####"),
        ("Granada", "Andalucía", "#####"),
    ),
    "de": (
        ("München", "Bayern", "#####"),
        ("Hamburg", "Hamburg", "#####"),
        ("Köln", "Nordrhein-Westfalen", "#####"),
        ("Leipzig", "Sachsen", "#####"),
        ("Stuttgart", "Baden-Württemberg", "#####"),
    ),
    "it": (
        ("Milano", "Lombardia", "#####"),
        ("Torino", "Piemonte", "#####"),
        ("Bologna", "Emilia-Romagna", "#####"),
        ("Firenze", "Toscana", "#####"),
        ("Napoli", "Campania", "#####"),
    ),
    "pt": (
        ("Lisboa", "Área Metropolitana de Lisboa", "####-###"),
        ("Porto", "Norte", "####-###"),
        ("Braga", "Norte", "####-###"),
        ("Coimbra", "Centro", "####-###"),
        ("Faro", "Algarve", "####-###"),
    ),
    "nl": (
        ("Utrecht", "Utrecht", "#### AA"),
        ("Rotterdam", "Zuid-Holland", "#### AA"),
        ("Eindhoven", "Noord-Brabant", "#### AA"),
        ("Groningen", "Groningen", "#### AA"),
        ("Haarlem", "Noord-Holland", "#### AA"),
    ),
}

STREETS: dict[str, tuple[str, ...]] = {
    "en": ("{n} Maple Street", "{n} Oak Avenue", "{n} Church Road", "{n} Station Lane", "{n} Mill Road"),
    "fr": ("{n} rue des Lilas", "{n} avenue Victor Hugo", "{n} boulevard Voltaire", "{n} rue de la Paix", "{n} place Bellecour"),
    "es": ("Calle Mayor {n}", "Avenida de la Constitución {n}", "Calle del Sol {n}", "Plaza de España {n}", "Calle Real {n}"),
    "de": ("Hauptstraße {n}", "Bahnhofstraße {n}", "Lindenweg {n}", "Schillerplatz {n}", "Gartenallee {n}"),
    "it": ("Via Roma {n}", "Corso Italia {n}", "Via Garibaldi {n}", "Piazza Dante {n}", "Viale Mazzini {n}"),
    "pt": ("Rua das Flores {n}", "Avenida da Liberdade {n}", "Rua Augusta {n}", "Travessa do Carmo {n}", "Praça do Comércio {n}"),
    "nl": ("Kerkstraat {n}", "Dorpsstraat {n}", "Stationsweg {n}", "Molenlaan {n}", "Prinsengracht {n}"),
}

# country names as written in each locale's language
COUNTRIES: dict[str, tuple[str, ...]] = {
    "en": ("United States", "United Kingdom", "France", "Spain", "Germany", "Italy", "Portugal", "Netherlands", "Ireland", "Canada"),
    "fr": ("France", "Belgique", "Suisse", "Espagne", "Allemagne", "Italie", "Portugal", "Pays-Bas", "Canada", "Luxembourg"),
    "es": ("España", "México", "Argentina", "Francia", "Alemania", "Italia", "Portugal", "Chile", "Colombia", "Países Bajos"),
    "de": ("Deutschland", "Österreich", "Schweiz", "Frankreich", "Spanien", "Italien", "Niederlande", "Belgien", "Polen", "Dänemark"),
    "it": ("Italia", "Francia", "Spagna", "Germania", "Svizzera", "Austria", "Portogallo", "Paesi Bassi", "Grecia", "Belgio"),
    "pt": ("Portugal", "Brasil", "Espanha", "França", "Alemanha", "Itália", "Angola", "Moçambique", "Países Baixos", "Suíça"),
    "nl": ("Nederland", "België", "Duitsland", "Frankrijk", "Spanje", "Italië", "Portugal", "Luxemburg", "Oostenrijk", "Zwitserland"),
}

# country used for locale-specific identifiers (IBAN, phone prefix)
LOCALE_COUNTRY = {"en": "GB", "fr": "FR", "es": "ES", "de": "DE", "it": "IT", "pt": "PT", "nl": "NL"}

# BBAN layout per IBAN country: 'A' letter, '#' digit, 'X' alphanumeric
IBAN_BBAN = {
    "GB": "AAAA##############",
    "FR": "##########XXXXXXXXXXX##",
    "ES": "####################",
    "DE": "##################",
    "IT": "A##########XXXXXXXXXXXX",
    "PT": "#####################",
    "NL": "AAAA##########",
}

PHONE_PREFIX = {"GB": "44", "FR": "33", "ES": "34", "DE": "49", "IT": "39", "PT": "351", "NL": "31", "US": "1"}

MONTHS: dict[str, tuple[str, ...]] = {
    "en": ("January", "February", "March", "April", "May", "June", "July", "August", "September", "October", "November", "December"),
    "fr": ("janvier", "février", "mars", "avril", "mai", "juin", "juillet", "août", "septembre", "octobre", "novembre", "décembre"),
    "es": ("enero", "febrero", "marzo", "abril", "mayo", "junio", "julio", "agosto", "septiembre", "octubre", "noviembre", "diciembre"),
    "de": ("Januar", "Februar", "März", "April", "Mai", "Juni", "Juli", "August", "September", "Oktober", "November", "Dezember"),
    "it": ("gennaio", "febbraio", "marzo", "aprile", "maggio", "giugno", "luglio", "agosto", "settembre", "ottobre", "novembre", "dicembre"),
    "pt": ("janeiro", "fevereiro", "março", "abril", "maio", "junho", "julho", "agosto", "setembro", "outubro", "novembro", "dezembro"),
    "nl": ("januari", "februari", "maart", "april", "mei", "juni", "juli", "augustus", "september", "oktober", "november", "december"),
}


def _union(table: dict[str, tuple]) -> frozenset:
    return frozenset(item for values in table.values() for item in values)


ALL_FIRST_NAMES = _union(FIRST_NAMES)
ALL_LAST_NAMES = _union(LAST_NAMES)
ALL_CITIES = frozenset(city for rows in CITIES.values() for city, _, _ in rows)
ALL_REGIONS = frozenset(region for rows in CITIES.values() for _, region, _ in rows)
ALL_COUNTRIES = _union(COUNTRIES)
ALL_MONTHS = _union(MONTHS)
