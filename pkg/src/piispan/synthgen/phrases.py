"""Localized field names and boilerplate for the template backend.

Boilerplate must not contain anything a detector could read as PII:
no digits besides clock times, no gazetteer names, cities or countries.
"""

from __future__ import annotations

# label -> (en, fr, es, de, it, pt, nl)
_FIELDS: dict[str, tuple[str, ...]] = {
    "person": ("Name", "Nom", "Nombre", "Name", "Nome", "Nome", "Naam"),
    "full_name": ("Full name", "Nom complet", "Nombre completo", "Vollständiger Name", "Nome completo", "Nome completo", "Volledige naam"),
    "first_name": ("First name", "Prénom", "Nombre de pila", "Vorname", "Nome di battesimo", "Primeiro nome", "Voornaam"),
    "middle_name": ("Middle name", "Deuxième prénom", "Segundo nombre", "Zweiter Vorname", "Secondo nome", "Nome do meio", "Tweede voornaam"),
    "last_name": ("Last name", "Nom de famille", "Apellido", "Nachname", "Cognome", "Apelido", "Achternaam"),
    "date_of_birth": ("Date of birth", "Date de naissance", "Fecha de nacimiento", "Geburtsdatum", "Data di nascita", "Data de nascimento", "Geboortedatum"),
    "email": ("Email", "E-mail", "Correo electrónico", "E-Mail", "Email", "E-mail", "E-mailadres"),
    "phone_number": ("Phone", "Téléphone", "Teléfono", "Telefon", "Telefono", "Telefone", "Telefoon"),
    "address": ("Address", "Adresse", "Dirección", "Adresse", "Indirizzo", "Morada", "Adres"),
    "street_address": ("Street address", "Adresse postale", "Calle y número", "Straße und Hausnummer", "Indirizzo stradale", "Rua e número", "Straat en huisnummer"),
    "city": ("City", "Ville", "Ciudad", "Stadt", "Città", "Cidade", "Stad"),
    "state_or_region": ("State or region", "Région", "Región", "Bundesland", "Regione", "Região", "Provincie"),
    "postal_code": ("Postal code", "Code postal", "Código postal", "Postleitzahl", "CAP", "Código postal", "Postcode"),
    "country": ("Country", "Pays", "País", "Land", "Paese", "País", "Land"),
    "national_id_number": ("National ID number", "Numéro de sécurité sociale", "DNI", "Personalausweisnummer", "Codice fiscale", "Cartão de Cidadão", "BSN"),
    "passport_number": ("Passport number", "Numéro de passeport", "Número de pasaporte", "Reisepassnummer", "Numero di passaporto", "Número do passaporte", "Paspoortnummer"),
    "drivers_license_number": ("Driver's license", "Permis de conduire", "Carnet de conducir", "Führerschein", "Patente", "Carta de condução", "Rijbewijs"),
    "license_number": ("License number", "Numéro de licence", "Número de licencia", "Lizenznummer", "Numero di licenza", "Número de licença", "Licentienummer"),
    "tax_number": ("Tax number", "Numéro fiscal", "NIF", "Steuernummer", "Partita IVA", "NIF", "Fiscaal nummer"),
    "account_number": ("Account number", "Numéro de compte", "Número de cuenta", "Kontonummer", "Numero di conto", "Número de conta", "Rekeningnummer"),
    "routing_number": ("Routing number", "Numéro de routage", "Número de enrutamiento", "Routing-Nummer", "Numero di instradamento", "Número de encaminhamento", "Routeringsnummer"),
    "iban": ("IBAN", "IBAN", "IBAN", "IBAN", "IBAN", "IBAN", "IBAN"),
    "card_number": ("Card number", "Numéro de carte", "Número de tarjeta", "Kartennummer", "Numero di carta", "Número do cartão", "Kaartnummer"),
    "card_expiry": ("Card expiry", "Expiration carte", "Caducidad tarjeta", "Karte gültig bis", "Scadenza carta", "Validade do cartão", "Vervaldatum kaart"),
    "card_cvv": ("CVV", "Cryptogramme", "Código de seguridad", "Prüfnummer", "Codice di sicurezza", "Código de segurança", "Beveiligingscode"),
    "username": ("Username", "Identifiant", "Usuario", "Benutzername", "Nome utente", "Utilizador", "Gebruikersnaam"),
    "ip_address": ("IP address", "Adresse IP", "Dirección IP", "IP-Adresse", "Indirizzo IP", "Endereço IP", "IP-adres"),
    "account_id": ("Customer ID", "Numéro client", "Número de cliente", "Kundennummer", "Codice cliente", "Número de cliente", "Klantnummer"),
    "sensitive_account_id": ("Account ID", "ID de compte", "ID de cuenta", "Konto-ID", "ID account", "ID da conta", "Account-ID"),
    "password": ("Password", "Mot de passe", "Contraseña", "Passwort", "Password", "Senha", "Wachtwoord"),
    "secret": ("Client secret", "Secret client", "Secreto de cliente", "Client-Geheimnis", "Segreto client", "Segredo do cliente", "Client-geheim"),
    "api_key": ("API key", "Clé API", "Clave API", "API-Schlüssel", "Chiave API", "Chave API", "API-sleutel"),
    "access_token": ("Access token", "Jeton d'accès", "Token de acceso", "Zugangstoken", "Token di accesso", "Token de acesso", "Toegangstoken"),
    "recovery_code": ("Recovery code", "Code de récupération", "Código de recuperación", "Wiederherstellungscode", "Codice di recupero", "Código de recuperação", "Herstelcode"),
    "sensitive_date": ("Date", "Date", "Fecha", "Datum", "Data", "Data", "Datum"),
    "document_date": ("Issue date", "Date d'émission", "Fecha de emisión", "Ausstellungsdatum", "Data di emissione", "Data de emissão", "Datum van uitgifte"),
    "expiration_date": ("Expiration date", "Date d'expiration", "Fecha de caducidad", "Ablaufdatum", "Data di scadenza", "Data de validade", "Geldig tot"),
    "transaction_date": ("Transaction date", "Date de la transaction", "Fecha de la transacción", "Buchungsdatum", "Data della transazione", "Data da transação", "Transactiedatum"),
}

_ORDER = ("en", "fr", "es", "de", "it", "pt", "nl")


def field_name(label: str, locale: str) -> str:
    return _FIELDS[label][_ORDER.index(locale)]


# environment-variable keys used in credential files for secret-like values
ENV_KEYS = {
    "password": "PASSWORD",
    "secret": "CLIENT_SECRET",
    "api_key": "API_KEY",
    "access_token": "ACCESS_TOKEN",
    "recovery_code": "RECOVERY_CODE",
}

# prose lead-ins; the value always ends the line
LEAD_INS: dict[str, dict[str, tuple[str, ...]]] = {
    "en": {
        "formal": ("Please note my {field}: {value}", "For your records, {field}: {value}"),
        "informal": ("here's my {field}: {value}", "my {field} is {value}"),
    },
    "fr": {
        "formal": ("Veuillez noter mon {field} : {value}", "Pour votre dossier, {field} : {value}"),
        "informal": ("voici mon {field} : {value}", "{field} : {value}"),
    },
    "es": {
        "formal": ("Le indico mi {field}: {value}", "Para su registro, {field}: {value}"),
        "informal": ("te paso mi {field}: {value}", "mi {field} es {value}"),
    },
    "de": {
        "formal": ("Anbei mein {field}: {value}", "Zur Kenntnis, {field}: {value}"),
        "informal": ("hier mein {field}: {value}", "{field} ist {value}"),
    },
    "it": {
        "formal": ("Le comunico il mio {field}: {value}", "Per la pratica, {field}: {value}"),
        "informal": ("ecco il mio {field}: {value}", "il mio {field} è {value}"),
    },
    "pt": {
        "formal": ("Segue o meu {field}: {value}", "Para registo, {field}: {value}"),
        "informal": ("aqui vai o meu {field}: {value}", "o meu {field} é {value}"),
    },
    "nl": {
        "formal": ("Hierbij mijn {field}: {value}", "Ter informatie, {field}: {value}"),
        "informal": ("hier is mijn {field}: {value}", "mijn {field} is {value}"),
    },
}

GREETINGS = {
    "en": {"formal": "Good morning,", "informal": "Hi there,"},
    "fr": {"formal": "Bonjour,", "informal": "Salut,"},
    "es": {"formal": "Buenos días,", "informal": "¡Hola!"},
    "de": {"formal": "Guten Tag,", "informal": "Hallo,"},
    "it": {"formal": "Buongiorno,", "informal": "Ciao,"},
    "pt": {"formal": "Bom dia,", "informal": "Olá,"},
    "nl": {"formal": "Goedemorgen,", "informal": "Hoi,"},
}

CLOSINGS = {
    "en": {"formal": "Kind regards, the support team", "informal": "Thanks a lot!"},
    "fr": {"formal": "Cordialement, le service client", "informal": "Merci beaucoup !"},
    "es": {"formal": "Atentamente, el equipo de soporte", "informal": "¡Muchas gracias!"},
    "de": {"formal": "Mit freundlichen Grüßen, das Support-Team", "informal": "Vielen Dank!"},
    "it": {"formal": "Cordiali saluti, il servizio clienti", "informal": "Grazie mille!"},
    "pt": {"formal": "Com os melhores cumprimentos, a equipa de apoio", "informal": "Muito obrigado!"},
    "nl": {"formal": "Met vriendelijke groet, het supportteam", "informal": "Heel erg bedankt!"},
}

TONE_LINES = {
    "en": {
        "neutral": "I am writing about the details below.",
        "friendly": "Hope you are doing well, just a quick update from my side.",
        "urgent": "This is urgent, please process it today.",
        "apologetic": "Sorry for the delay in sending this information.",
    },
    "fr": {
        "neutral": "Je vous écris au sujet des informations ci-dessous.",
        "friendly": "J'espère que vous allez bien, petite mise à jour de ma part.",
        "urgent": "C'est urgent, merci de traiter cela aujourd'hui.",
        "apologetic": "Désolé pour le retard dans l'envoi de ces informations.",
    },
    "es": {
        "neutral": "Le escribo sobre los datos siguientes.",
        "friendly": "Espero que todo vaya bien, te mando una actualización.",
        "urgent": "Es urgente, por favor tramítelo hoy.",
        "apologetic": "Perdone el retraso en enviar esta información.",
    },
    "de": {
        "neutral": "Ich schreibe wegen der folgenden Angaben.",
        "friendly": "Ich hoffe, es geht Ihnen gut, hier ein kurzes Update.",
        "urgent": "Das ist dringend, bitte heute noch bearbeiten.",
        "apologetic": "Entschuldigen Sie die verspätete Zusendung.",
    },
    "it": {
        "neutral": "Le scrivo in merito ai dati seguenti.",
        "friendly": "Spero vada tutto bene, ecco un breve aggiornamento.",
        "urgent": "È urgente, la prego di procedere oggi stesso.",
        "apologetic": "Mi scusi per il ritardo nell'invio di queste informazioni.",
    },
    "pt": {
        "neutral": "Escrevo a propósito dos dados abaixo.",
        "friendly": "Espero que esteja tudo bem, aqui fica uma atualização.",
        "urgent": "É urgente, por favor trate disto hoje.",
        "apologetic": "Peço desculpa pelo atraso no envio destes dados.",
    },
    "nl": {
        "neutral": "Ik schrijf u over de onderstaande gegevens.",
        "friendly": "Ik hoop dat alles goed gaat, hier een korte update.",
        "urgent": "Dit is dringend, graag vandaag nog verwerken.",
        "apologetic": "Excuses voor de vertraging bij het versturen hiervan.",
    },
}

# document-type titles and speaker roles
TITLES = {
    "chat_log": ("Chat transcript", "Transcription de chat", "Transcripción del chat", "Chatprotokoll", "Trascrizione chat", "Transcrição do chat", "Chatgesprek"),
    "support_ticket": ("Support ticket", "Ticket d'assistance", "Ticket de soporte", "Support-Ticket", "Ticket di assistenza", "Pedido de suporte", "Supportticket"),
    "crm_note": ("CRM note", "Note CRM", "Nota CRM", "CRM-Notiz", "Nota CRM", "Nota CRM", "CRM-notitie"),
    "kyc_form": ("Identity verification form", "Formulaire de vérification d'identité", "Formulario de verificación de identidad", "Formular zur Identitätsprüfung", "Modulo di verifica dell'identità", "Formulário de verificação de identidade", "Formulier identiteitsverificatie"),
    "invoice": ("Invoice", "Facture", "Factura", "Rechnung", "Fattura", "Fatura", "Factuur"),
    "medical_record": ("Medical record", "Dossier médical", "Historia clínica", "Patientenakte", "Cartella clinica", "Processo clínico", "Medisch dossier"),
    "credential_file": ("Service credentials", "Identifiants du service", "Credenciales del servicio", "Dienst-Zugangsdaten", "Credenziali del servizio", "Credenciais do serviço", "Inloggegevens van de dienst"),
}

SPEAKERS = {
    "en": ("Agent", "Customer"),
    "fr": ("Conseiller", "Client"),
    "es": ("Agente", "Usuario final"),
    "de": ("Berater", "Kunde"),
    "it": ("Operatore", "Utente finale"),
    "pt": ("Assistente", "Utente"),
    "nl": ("Medewerker", "Klant"),
}

EXTRA_LINES = {
    "invoice": {
        "en": "Consulting services, flat fee",
        "fr": "Prestations de conseil, forfait",
        "es": "Servicios de consultoría, tarifa plana",
        "de": "Beratungsleistungen, Pauschale",
        "it": "Servizi di consulenza, forfait",
        "pt": "Serviços de consultoria, valor fixo",
        "nl": "Adviesdiensten, vast tarief",
    },
    "medical_record": {
        "en": "Clinical note: follow-up visit, symptoms improving.",
        "fr": "Note clinique : visite de suivi, symptômes en amélioration.",
        "es": "Nota clínica: visita de seguimiento, síntomas en mejoría.",
        "de": "Klinische Notiz: Kontrolltermin, Symptome bessern sich.",
        "it": "Nota clinica: visita di controllo, sintomi in miglioramento.",
        "pt": "Nota clínica: consulta de seguimento, sintomas a melhorar.",
        "nl": "Klinische notitie: controlebezoek, klachten nemen af.",
    },
}


def title(doc_type: str, locale: str) -> str:
    return TITLES[doc_type][_ORDER.index(locale)]
